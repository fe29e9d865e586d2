#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "goodies/counting.hpp"
#include "goodies/exact.hpp"
#include "goodies/k2.hpp"

using namespace goodies;

namespace {
Rational rat(long p, long q) { return Rational(p, q); }
}  // namespace

TEST_CASE("survivor leftover probabilities, smallest asymmetric case") {
    CHECK(prob_survivor_leftover(1, 3, 1, 1) == rat(1, 8));
    CHECK(prob_survivor_leftover(1, 3, 2, 1) == rat(1, 8));
    CHECK(prob_survivor_leftover(1, 3, 2, 2) == rat(1, 4));
    CHECK(prob_survivor_leftover(1, 3, 2, 3) == rat(1, 2));
    CHECK(prob_survivor_leftover(1, 3, 1, 0) == 0);
    CHECK(prob_survivor_leftover(1, 3, 1, 2) == 0);
    CHECK(prob_survivor_leftover(1, 3, 2, 4) == 0);
    CHECK_THROWS_AS(prob_survivor_leftover(0, 3, 1, 1), std::domain_error);
    CHECK_THROWS_AS(prob_survivor_leftover(1, 3, 3, 1), std::domain_error);
}

TEST_CASE("decomposition of the smallest asymmetric case") {
    K2Decomposition d = k2_decompose(1, 3);
    CHECK(d.p1 == rat(1, 8));
    CHECK(d.p2 == rat(7, 8));
    CHECK(d.e1 == rat(1, 8));
    CHECK(d.e2 == rat(17, 8));
    CHECK(d.first_term == rat(3, 2));
    CHECK(d.second_term == rat(3, 4));
    CHECK(d.expected_unhappy == rat(9, 4));
}

TEST_CASE("balanced two-type cases are symmetric") {
    for (int n = 1; n <= 12; ++n) {
        K2Decomposition d = k2_decompose(n, n);
        CHECK(d.p1 == rat(1, 2));
        CHECK(d.p2 == rat(1, 2));
        CHECK(d.first_term == 0);
        CHECK(d.e1 == d.e2);
    }
}

TEST_CASE("closed form reconciles with the engine on every pair") {
    ExactEngine e;
    for (int n1 = 1; n1 <= 12; ++n1)
        for (int n2 = 1; n2 <= 12; ++n2) {
            K2Decomposition d = k2_decompose(n1, n2);
            CHECK(d.p1 + d.p2 == 1);
            CHECK(d.e1 + d.e2 == d.expected_unhappy);
            CHECK(d.first_term + d.second_term == d.expected_unhappy);
            Rational engine_eu =
                Rational(n1 + n2) - e.happy_exact(Assortment({n1, n2}));
            CHECK(d.expected_unhappy == engine_eu);
            CHECK(k2_sign_claim_holds(n1, n2));
        }
}

TEST_CASE("consecutive leftover counts telescope") {
    // (N - r - 1) Pr[survivor 1, leftover r+1] = 2 (n1 - r) Pr[survivor 1, leftover r]
    for (int n1 : {2, 3, 5, 8})
        for (int n2 : {1, 4, 7}) {
            const int N = n1 + n2;
            for (int r = 1; r < n1; ++r) {
                Rational lhs = Rational(N - r - 1) *
                               prob_survivor_leftover(n1, n2, 1, r + 1);
                Rational rhs = Rational(2 * (n1 - r)) *
                               prob_survivor_leftover(n1, n2, 1, r);
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("survivor probability agrees with the joint first-emptying law") {
    for (int n1 = 1; n1 <= 9; ++n1)
        for (int n2 = 1; n2 <= 9; ++n2) {
            JointDistribution d = joint_first_empty(Assortment({n1, n2}));
            // survivor 1 means type 2 (index 1) empties first
            CHECK(prob_survivor(n1, n2, 1) == d.marginal_type(1));
            CHECK(prob_survivor(n1, n2, 2) == d.marginal_type(0));
        }
}
