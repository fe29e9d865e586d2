#include "goodies/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "goodies/exact.hpp"
#include "goodies/simulate.hpp"

namespace goodies {

double wald_upper(const Assortment& a) {
    if (a.k() < 2) throw std::domain_error("upper bound needs at least two types");
    if (!a.all_positive()) throw std::domain_error("upper bound needs every type positive");
    return static_cast<double>(a.k()) * static_cast<double>(a.min_stock());
}

double delta_min(int k, long n_m) {
    if (k < 3) throw std::domain_error("lower bound slack needs at least three types");
    if (n_m < 1) throw std::domain_error("minimum stock must be positive");
    const double lk3 = 3.0 * std::log(static_cast<double>(k));
    const double root = std::sqrt(lk3 * (2.0 * static_cast<double>(n_m) + lk3));
    return static_cast<double>(k - 2) * (root - lk3);
}

double chernoff_lower(const Assortment& a) {
    if (a.k() < 3) throw std::domain_error("lower bound needs at least three types");
    if (!a.all_positive()) throw std::domain_error("lower bound needs every type positive");
    const long m = a.min_stock();
    const double raw = static_cast<double>(a.k() - 2) * static_cast<double>(m) -
                       delta_min(a.k(), m);
    return std::max(0.0, raw);
}

double uniform_drain_gamma(const std::vector<double>& x) {
    int s = 0;
    double mn = 0;
    for (double v : x)
        if (v > 0) {
            if (s == 0 || v < mn) mn = v;
            ++s;
        }
    return s > 0 ? static_cast<double>(s) * mn : 0.0;
}

double h_hat(const Assortment& a, const DrainGamma& gamma, long max_steps) {
    std::vector<double> x(a.stocks.begin(), a.stocks.end());
    double total = 0;
    for (long step = 0; step < max_steps; ++step) {
        int s = 0;
        for (double v : x)
            if (v > 0) ++s;
        if (s < 2) return total;
        double g = gamma(x);
        if (!(g > 0)) return total;
        total += g;
        const double share = g / static_cast<double>(s);
        for (double& v : x)
            if (v > 0) v = std::max(0.0, v - share);
    }
    throw std::runtime_error("drain did not terminate; gamma policy too timid");
}

BoundsReport bounds_report(const Assortment& a, const std::string& method,
                           std::uint64_t runs, std::uint64_t seed, int threads,
                           ExactEngine& engine) {
    if (a.k() < 2 || !a.all_positive())
        throw std::domain_error("bounds need at least two types, every one positive");
    bool exact;
    if (method == "exact") {
        exact = true;
    } else if (method == "simulate") {
        exact = false;
    } else if (method == "auto") {
        exact = (a.k() <= 2 && a.total() <= 200) || (a.k() <= 3 && a.total() <= 60);
    } else {
        throw std::domain_error("method must be exact, simulate, or auto");
    }

    BoundsReport r;
    r.a = a;
    r.wald = wald_upper(a);
    if (a.k() >= 3) {
        r.has_chernoff = true;
        r.chernoff = chernoff_lower(a);
    }
    r.h_hat_value = h_hat(a);
    if (exact) {
        r.tau_method = "exact";
        r.tau_value = to_double(engine.tau_exact(a));
        r.tau_se = 0;
    } else {
        r.tau_method = "simulate";
        TauEstimate e = estimate_tau(a, runs, seed, threads);
        r.tau_value = e.mean;
        r.tau_se = e.se;
    }
    const double slop = 3.0 * r.tau_se;
    r.bounds_hold = r.tau_value - slop <= r.wald &&
                    (!r.has_chernoff || r.chernoff <= r.tau_value + slop);
    return r;
}

}  // namespace goodies
