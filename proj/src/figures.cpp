#include "goodies/figures.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "goodies/analysis.hpp"
#include "goodies/bounds.hpp"
#include "goodies/rng.hpp"
#include "goodies/sampling.hpp"
#include "goodies/simulate.hpp"

namespace goodies {

namespace {

// Seed derivation: stream 1 feeds the assortment samplers (one child per
// regime), stream 2 feeds per-row simulations (one child per global row).
std::uint64_t sampler_seed(std::uint64_t master, int regime) {
    return child_seed(child_seed(master, 1), static_cast<std::uint64_t>(regime));
}
std::uint64_t row_seed(std::uint64_t master, int row) {
    return child_seed(child_seed(master, 2), static_cast<std::uint64_t>(row));
}

TauRow make_tau_row(const std::string& regime, int index, Assortment a,
                    std::uint64_t runs, std::uint64_t sim_seed, int threads) {
    TauRow row;
    row.regime = regime;
    row.sample_index = index;
    row.min_stock = a.min_stock();
    row.upper = static_cast<double>(a.k()) * row.min_stock;
    if (a.k() >= 3) {
        row.has_lower = true;
        row.lower = chernoff_lower(a);
    }
    TauEstimate e = estimate_tau(a, runs, sim_seed, threads);
    row.tau_hat = e.mean;
    row.se_tau = e.se;
    row.a = std::move(a);
    return row;
}

}  // namespace

std::vector<TauRow> figure_tau_rows(const std::string& name, std::uint64_t runs,
                                    std::uint64_t master_seed, int threads) {
    std::vector<TauRow> rows;
    int global_row = 0;

    auto box_regimes = [&](const std::vector<std::array<int, 3>>& boxes, int samples) {
        for (int r = 0; r < static_cast<int>(boxes.size()); ++r) {
            auto [k, lo, hi] = boxes[r];
            std::ostringstream tag;
            tag << "u-k" << k << "-" << lo << "-" << hi;
            SplitMix64 sampler(sampler_seed(master_seed, r));
            for (int i = 0; i < samples; ++i) {
                Assortment a = sample_uniform_box(k, lo, hi, sampler);
                rows.push_back(make_tau_row(tag.str(), i, std::move(a), runs,
                                            row_seed(master_seed, global_row++), threads));
            }
        }
    };
    auto composition_regimes = [&](const std::vector<std::array<int, 2>>& plans,
                                   int samples) {
        for (int r = 0; r < static_cast<int>(plans.size()); ++r) {
            auto [k, total] = plans[r];
            std::ostringstream tag;
            tag << "s-k" << k << "-n" << total;
            SplitMix64 sampler(sampler_seed(master_seed, r));
            for (int i = 0; i < samples; ++i) {
                Assortment a = sample_composition(k, total, sampler);
                rows.push_back(make_tau_row(tag.str(), i, std::move(a), runs,
                                            row_seed(master_seed, global_row++), threads));
            }
        }
    };
    auto exhaustive = [&](int k, int total) {
        std::ostringstream tag;
        tag << "all-k" << k << "-n" << total;
        int i = 0;
        for (auto& a : all_positive_assortments(total, k))
            rows.push_back(make_tau_row(tag.str(), i++, std::move(a), runs,
                                        row_seed(master_seed, global_row++), threads));
    };

    if (name == "approx-tau") {
        box_regimes({{{5, 1, 100}}, {{5, 1, 150}}, {{5, 1, 200}},
                     {{10, 1, 50}}, {{10, 1, 80}}, {{10, 1, 100}}},
                    30);
    } else if (name == "s-distribution") {
        composition_regimes(
            {{{5, 250}}, {{5, 375}}, {{5, 500}}, {{10, 250}}, {{10, 400}}, {{10, 500}}},
            30);
    } else if (name == "small-k") {
        exhaustive(3, 60);
    } else if (name == "k-5") {
        exhaustive(5, 60);
    } else {
        throw std::domain_error("unknown figure: " + name);
    }
    return rows;
}

std::vector<LargeKRow> figure_large_k(int samples, std::uint64_t runs,
                                      std::uint64_t master_seed, int threads) {
    std::vector<LargeKRow> rows;
    SplitMix64 sampler(sampler_seed(master_seed, 0));
    for (int i = 0; i < samples; ++i) {
        Assortment a = sample_uniform_box(50, 200, 500, sampler);
        LargeKRow row;
        row.sample_index = i;
        row.lower = chernoff_lower(a);
        row.tau_hat = estimate_tau(a, runs, row_seed(master_seed, i), threads).mean;
        row.a = std::move(a);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<HatRow> figure_h_hat(int samples, int sim_runs,
                                 std::uint64_t master_seed, ExactEngine& engine) {
    std::vector<HatRow> rows;
    SplitMix64 sampler(sampler_seed(master_seed, 0));
    for (int i = 0; i < samples; ++i) {
        Assortment a = sample_uniform_box(3, 10, 30, sampler);
        HatRow row;
        row.sample_index = i;
        row.h_hat_value = h_hat(a);
        row.h_value = engine.happy_float(a);
        SimStats s = simulate_many(a, static_cast<std::uint64_t>(sim_runs),
                                   row_seed(master_seed, i));
        row.sim_mean = static_cast<double>(a.total()) - s.mean_unhappy;
        row.a = std::move(a);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const HatRow& x, const HatRow& y) { return x.h_value < y.h_value; });
    return rows;
}

}  // namespace goodies
