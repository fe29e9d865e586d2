#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "goodies/analysis.hpp"
#include "goodies/bounds.hpp"
#include "goodies/exact.hpp"

using namespace goodies;

TEST_CASE("upper bound is k times the minimum stock") {
    CHECK(wald_upper(Assortment({3, 4, 2})) == 6.0);
    CHECK(wald_upper(Assortment({2, 2})) == 4.0);
    CHECK_THROWS_AS(wald_upper(Assortment({5})), std::domain_error);
    CHECK_THROWS_AS(wald_upper(Assortment({0, 2})), std::domain_error);
}

TEST_CASE("lower bound constants") {
    CHECK(delta_min(50, 200) == doctest::Approx(2773.3291993723838).epsilon(1e-12));
    Assortment flat(std::vector<int>(50, 200));
    CHECK(chernoff_lower(flat) == doctest::Approx(6826.670800627617).epsilon(1e-12));
    CHECK_THROWS_AS(delta_min(2, 100), std::domain_error);
    CHECK_THROWS_AS(delta_min(5, 0), std::domain_error);
    CHECK_THROWS_AS(chernoff_lower(Assortment({4, 4})), std::domain_error);
    CHECK_THROWS_AS(chernoff_lower(Assortment({4, 0, 4})), std::domain_error);
    CHECK(chernoff_lower(Assortment({1, 1, 1})) >= 0.0);
}

TEST_CASE("drain surrogate closed forms") {
    CHECK(h_hat(Assortment({2, 2})) == 4.0);
    CHECK(h_hat(Assortment(std::vector<int>(4, 300))) == 1200.0);
    CHECK(h_hat(Assortment({10, 20, 30})) == 50.0);
    // three types, sorted s <= m <= l: the drain telescopes to s + 2m
    for (int s = 0; s <= 6; ++s)
        for (int m = s; m <= 8; ++m)
            for (int l = m; l <= 9; ++l)
                CHECK(h_hat(Assortment({l, s, m})) == double(s + 2 * m));
    // zero entries never rejoin the drain
    CHECK(h_hat(Assortment({5, 0, 7})) == 10.0);
    CHECK(h_hat(Assortment({5})) == 0.0);
    CHECK(h_hat(Assortment({0, 0})) == 0.0);
}

TEST_CASE("drain surrogate is scale covariant and permutation invariant") {
    Assortment a({7, 13, 29});
    Assortment b({13, 29, 7});
    CHECK(h_hat(a) == h_hat(b));
    Assortment scaled({70, 130, 290});
    CHECK(h_hat(scaled) == doctest::Approx(10 * h_hat(a)).epsilon(1e-12));
}

TEST_CASE("a timid custom step policy is rejected instead of spinning") {
    // constant tiny step: no entry can empty within the step budget, so the
    // drain must give up instead of looping
    DrainGamma timid = [](const std::vector<double>&) { return 1e-6; };
    CHECK_THROWS_AS(h_hat(Assortment({8, 9, 10}), timid, 64), std::runtime_error);
}

TEST_CASE("bounds sandwich the exact expectation for small three-type cases") {
    ExactEngine e;
    for (int total = 3; total <= 21; ++total)
        for (auto& a : all_positive_assortments(total, 3)) {
            double tau = to_double(e.tau_exact(a));
            CHECK(tau <= wald_upper(a) + 1e-9);
            CHECK(tau >= chernoff_lower(a) - 1e-9);
        }
}

TEST_CASE("bounds report, exact and simulated") {
    ExactEngine e;
    BoundsReport exact = bounds_report(Assortment({3, 4, 2}), "exact", 0, 1, 1, e);
    CHECK(exact.tau_method == "exact");
    CHECK(exact.tau_value == doctest::Approx(1067.0 / 243.0).epsilon(1e-12));
    CHECK(exact.tau_se == 0.0);
    CHECK(exact.bounds_hold);
    CHECK(exact.h_hat_value == 8.0);  // sorted (2,3,4): 2 + 2*3

    BoundsReport sim = bounds_report(Assortment({3, 4, 2}), "simulate", 4000, 7, 1, e);
    CHECK(sim.tau_method == "simulate");
    CHECK(sim.tau_se > 0.0);
    CHECK(std::abs(sim.tau_value - 1067.0 / 243.0) <= 3 * sim.tau_se);
    CHECK(sim.bounds_hold);

    BoundsReport aut = bounds_report(Assortment({3, 4, 2}), "auto", 4000, 7, 1, e);
    CHECK(aut.tau_method == "exact");
    BoundsReport aut_big =
        bounds_report(Assortment(std::vector<int>(5, 40)), "auto", 2000, 7, 1, e);
    CHECK(aut_big.tau_method == "simulate");
    CHECK(aut_big.bounds_hold);

    CHECK_THROWS_AS(bounds_report(Assortment({3, 0, 2}), "auto", 10, 1, 1, e),
                    std::domain_error);
    CHECK_THROWS_AS(bounds_report(Assortment({3, 3}), "nope", 10, 1, 1, e),
                    std::domain_error);
}

TEST_CASE("two-type reports omit the lower bound") {
    ExactEngine e;
    BoundsReport r = bounds_report(Assortment({6, 9}), "exact", 0, 1, 1, e);
    CHECK_FALSE(r.has_chernoff);
    CHECK(r.bounds_hold);
}
