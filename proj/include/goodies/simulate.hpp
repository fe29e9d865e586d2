#pragma once

#include <cstdint>
#include <vector>

#include "goodies/assortment.hpp"
#include "goodies/rng.hpp"

namespace goodies {

// One full run of the urn process: attendees draw a uniformly random type
// among those still in stock, until at most one type remains. unhappy is the
// leftover stock of the surviving type (equivalently total - rounds).
struct SimOutcome {
    int unhappy = 0;
    long rounds = 0;                   // happy attendees served
    std::vector<long> emptying_times;  // rounds at which some type hit zero, increasing
    int first_empty_type = -1;         // type index of the first emptying, -1 if none occurred
    long tau() const {                 // first emptying time; only meaningful when
        return emptying_times.empty() ? -1 : emptying_times.front();  // >= 2 types start positive
    }
};

// Per-gap decrease statistics between consecutive emptying events, averaged
// over runs. Gap g runs from event g to event g+1, where event 0 is the
// start of the process and the initial support has size S.
//   survivor_mean_decrease[g]: mean per-type decrease, over the S-g-1 types
//                              still positive when gap g ends
//   uniform_share[g]:          mean gap length divided by S-g, the expected
//                              per-type decrease if draws split evenly among
//                              the S-g types positive during the gap
// Near-balanced assortments should have these two close to each other.
struct GapTable {
    std::vector<double> survivor_mean_decrease;
    std::vector<double> uniform_share;
    std::vector<std::int64_t> sum_survivor_decrease;  // raw integer accumulators
    std::vector<std::int64_t> sum_gap_length;
};

// Monte Carlo aggregate. All per-run observables are integers, so the sums
// below are exact and merging partial sums is associative: the final stats
// are bit-identical for a given (assortment, runs, seed) regardless of the
// thread count. Caller must keep runs * total^2 below 2^63.
struct SimStats {
    std::uint64_t runs = 0;
    double mean_unhappy = 0, variance_unhappy = 0, se_unhappy = 0;
    bool has_tau = false;  // false when fewer than two types start positive
    double mean_tau = 0, variance_tau = 0, se_tau = 0;
    GapTable gaps;
    std::int64_t sum_unhappy = 0, sum_unhappy_sq = 0;
    std::int64_t sum_tau = 0, sum_tau_sq = 0;
};

// Lightweight aggregate for the first-emptying time alone.
struct TauEstimate {
    std::uint64_t runs = 0;
    double mean = 0, variance = 0, se = 0;
    std::int64_t sum = 0, sum_sq = 0;
};

// Single run driven by the given stream. Throws std::domain_error when no
// type has stock.
SimOutcome simulate_once(const Assortment& a, SplitMix64& rng);

// runs independent runs on child streams child_seed(master_seed, i),
// aggregated exactly. threads > 1 splits the index range into contiguous
// chunks; results are identical to the single-threaded ones.
SimStats simulate_many(const Assortment& a, std::uint64_t runs,
                       std::uint64_t master_seed, int threads = 1);

// First-emptying time only, same child streams as simulate_many, stopping
// each run at the first zero. Requires every type positive; while all types
// are in stock a full run draws uniformly over all k types, so per child
// seed this consumes the identical prefix of the stream and records the
// identical tau as simulate_many. Orders of magnitude faster when stocks are
// large, since the tail of the process is skipped.
TauEstimate estimate_tau(const Assortment& a, std::uint64_t runs,
                         std::uint64_t master_seed, int threads = 1);

}  // namespace goodies
