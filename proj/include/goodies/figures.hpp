#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goodies/assortment.hpp"
#include "goodies/exact.hpp"

namespace goodies {

// Precomputed data series behind the standard plots. Each generator is a
// pure function of (name, runs, seed, threads): sampling streams and
// per-row simulation streams are derived from the master seed, so the same
// invocation always produces identical rows.

// Simulated first-emptying time against its closed-form bounds.
struct TauRow {
    std::string regime;
    int sample_index = 0;  // within the regime
    Assortment a;
    int min_stock = 0;
    double tau_hat = 0, se_tau = 0;
    double upper = 0;            // k * min stock
    bool has_lower = false;      // k >= 3
    double lower = 0;
};

// name selects the sampling plan:
//   approx-tau:     30 draws from each box U^5[1,100], U^5[1,150],
//                   U^5[1,200], U^10[1,50], U^10[1,80], U^10[1,100]
//   s-distribution: 30 uniform compositions for each of (k,total) in
//                   (5,250) (5,375) (5,500) (10,250) (10,400) (10,500)
//   small-k:        every sorted positive 3-type assortment with total 60
//   k-5:            every sorted positive 5-type assortment with total 60
std::vector<TauRow> figure_tau_rows(const std::string& name, std::uint64_t runs,
                                    std::uint64_t master_seed, int threads);

// Simulated first-emptying time against its lower bound for many types:
// `samples` draws from U^50[200,500].
struct LargeKRow {
    int sample_index = 0;
    Assortment a;
    double tau_hat = 0;
    double lower = 0;
};
std::vector<LargeKRow> figure_large_k(int samples, std::uint64_t runs,
                                      std::uint64_t master_seed, int threads);

// Deterministic drain surrogate against the exact expectation and a small
// simulation average: `samples` draws from U^3[10,30], rows sorted by the
// exact value. sample_index keeps the draw order from before sorting.
struct HatRow {
    int sample_index = 0;
    Assortment a;
    double h_hat_value = 0;
    double h_value = 0;    // engine, float mode
    double sim_mean = 0;   // mean happy rounds over sim_runs runs
};
std::vector<HatRow> figure_h_hat(int samples, int sim_runs,
                                 std::uint64_t master_seed, ExactEngine& engine);

}  // namespace goodies
