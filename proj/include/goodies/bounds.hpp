#pragma once

#include <functional>
#include <string>

#include "goodies/assortment.hpp"

namespace goodies {

// Upper bound on the expected first-emptying time: a stopped sum of k
// uniform type choices gives E[tau] <= k * min stock. Requires at least two
// types, every one positive.
double wald_upper(const Assortment& a);

// Smallest admissible slack in the concentration lower bound on E[tau] for
// k >= 3 types with minimum stock n_m:
//   delta_min = (k-2) * (sqrt(3 ln k * (2 n_m + 3 ln k)) - 3 ln k)
double delta_min(int k, long n_m);

// Lower bound on the expected first-emptying time for k >= 3, every type
// positive: max(0, (k-2) * min stock - delta_min).
double chernoff_lower(const Assortment& a);

// Step size policy for the deterministic drain below: given the current
// (real-valued) stock vector, how much total stock the next batch of
// attendees consumes.
using DrainGamma = std::function<double(const std::vector<double>&)>;

// Default policy: with S positive entries, spend S * (smallest positive
// entry). Each entry loses gamma / S, so every smallest entry lands exactly
// on zero: the drain finishes in at most k steps.
double uniform_drain_gamma(const std::vector<double>& x);

// Deterministic surrogate for the expected happy rounds h: repeatedly
// spend gamma attendees, split evenly over the S currently positive types
// (clamping at zero), until fewer than two types remain positive or gamma
// is no longer positive. Homogeneous of degree one and permutation
// invariant by construction. With the default policy and sorted three-type
// stocks s <= m <= l this telescopes to s + 2m.
//
// A custom gamma that merely shrinks the stocks geometrically would never
// terminate; after max_steps iterations the drain throws std::runtime_error.
double h_hat(const Assortment& a, const DrainGamma& gamma = uniform_drain_gamma,
             long max_steps = 10000);

// One assortment's bounds, the h surrogate, and an estimate (or exact
// value) of E[tau] to compare them against.
struct BoundsReport {
    Assortment a;
    double wald = 0;
    bool has_chernoff = false;  // k >= 3 only
    double chernoff = 0;
    double h_hat_value = 0;
    std::string tau_method;  // "exact" or "simulate"
    double tau_value = 0;
    double tau_se = 0;       // 0 when exact
    bool bounds_hold = true; // chernoff - 3se <= tau and tau - 3se <= wald
};

class ExactEngine;

// method: "exact", "simulate", or "auto" (exact when the state space is
// comfortably small: k <= 2 and total <= 200, or k <= 3 and total <= 60).
BoundsReport bounds_report(const Assortment& a, const std::string& method,
                           std::uint64_t runs, std::uint64_t seed, int threads,
                           ExactEngine& engine);

}  // namespace goodies
