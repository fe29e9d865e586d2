#include "goodies/simulate.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace goodies {

namespace {

// Partial aggregate for one contiguous chunk of run indices. Everything is
// an exact integer, so merging chunks commutes and the totals cannot depend
// on the thread schedule.
struct Partial {
    std::int64_t su = 0, su2 = 0, st = 0, st2 = 0;
    std::vector<std::int64_t> surv, gaplen;

    explicit Partial(int gap_count) : surv(gap_count, 0), gaplen(gap_count, 0) {}

    void add(const Partial& o) {
        su += o.su;
        su2 += o.su2;
        st += o.st;
        st2 += o.st2;
        for (size_t g = 0; g < surv.size(); ++g) {
            surv[g] += o.surv[g];
            gaplen[g] += o.gaplen[g];
        }
    }
};

// Unbiased sample variance from exact sums; the numerator is formed in
// 128-bit integers so no cancellation occurs before the final division.
double variance_from_sums(std::int64_t sum, std::int64_t sum_sq, std::uint64_t n) {
    if (n < 2) return 0.0;
    __int128 num = static_cast<__int128>(sum_sq) * static_cast<__int128>(n) -
                   static_cast<__int128>(sum) * static_cast<__int128>(sum);
    return static_cast<double>(num) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

void run_chunk(const Assortment& a, std::uint64_t begin, std::uint64_t end,
               std::uint64_t master_seed, Partial& out) {
    const int k = a.k();
    const long total = a.total();
    std::vector<int> state(k), last_state(k);
    for (std::uint64_t r = begin; r < end; ++r) {
        SplitMix64 rng(child_seed(master_seed, r));
        state = a.stocks;
        last_state = state;
        std::vector<int> support = a.support();
        long t = 0, last_t = 0, tau = -1;
        int gap = 0;
        while (support.size() > 1) {
            ++t;
            size_t j = rng.next_below(support.size());
            int type = support[j];
            if (--state[type] == 0) {
                if (tau < 0) tau = t;
                // gap `gap` just ended: credit the decrease of each survivor
                for (int i = 0; i < k; ++i)
                    if (state[i] > 0) out.surv[gap] += last_state[i] - state[i];
                out.gaplen[gap] += t - last_t;
                ++gap;
                last_state = state;
                last_t = t;
                support[j] = support.back();
                support.pop_back();
            }
        }
        long unhappy = total - t;
        assert(unhappy == std::accumulate(state.begin(), state.end(), 0L));
        out.su += unhappy;
        out.su2 += unhappy * unhappy;
        if (tau >= 0) {
            out.st += tau;
            out.st2 += tau * tau;
        }
    }
}

}  // namespace

SimOutcome simulate_once(const Assortment& a, SplitMix64& rng) {
    if (a.support_size() == 0) throw std::domain_error("assortment has no stock");
    SimOutcome out;
    std::vector<int> state = a.stocks;
    std::vector<int> support = a.support();
    long t = 0;
    while (support.size() > 1) {
        ++t;
        size_t j = rng.next_below(support.size());
        int type = support[j];
        if (--state[type] == 0) {
            out.emptying_times.push_back(t);
            if (out.first_empty_type < 0) out.first_empty_type = type;
            support[j] = support.back();
            support.pop_back();
        }
    }
    out.rounds = t;
    out.unhappy = static_cast<int>(a.total() - t);
    // leftover stock of the surviving type equals total - rounds
    assert(out.unhappy == std::accumulate(state.begin(), state.end(), 0));
    return out;
}

SimStats simulate_many(const Assortment& a, std::uint64_t runs,
                       std::uint64_t master_seed, int threads) {
    if (a.support_size() == 0) throw std::domain_error("assortment has no stock");
    if (runs == 0) throw std::domain_error("runs must be positive");
    if (threads < 1) threads = 1;
    const int sup = a.support_size();
    const int gap_count = sup >= 2 ? sup - 1 : 0;

    Partial total(gap_count);
    if (threads == 1 || runs < 2 * static_cast<std::uint64_t>(threads)) {
        run_chunk(a, 0, runs, master_seed, total);
    } else {
        std::vector<Partial> parts(threads, Partial(gap_count));
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) {
            std::uint64_t begin = runs * i / threads;
            std::uint64_t end = runs * (i + 1) / threads;
            pool.emplace_back([&, begin, end, i] {
                run_chunk(a, begin, end, master_seed, parts[i]);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts) total.add(p);
    }

    SimStats s;
    s.runs = runs;
    s.sum_unhappy = total.su;
    s.sum_unhappy_sq = total.su2;
    s.mean_unhappy = static_cast<double>(total.su) / static_cast<double>(runs);
    s.variance_unhappy = variance_from_sums(total.su, total.su2, runs);
    s.se_unhappy = std::sqrt(s.variance_unhappy / static_cast<double>(runs));
    s.has_tau = gap_count > 0;
    if (s.has_tau) {
        s.sum_tau = total.st;
        s.sum_tau_sq = total.st2;
        s.mean_tau = static_cast<double>(total.st) / static_cast<double>(runs);
        s.variance_tau = variance_from_sums(total.st, total.st2, runs);
        s.se_tau = std::sqrt(s.variance_tau / static_cast<double>(runs));
        s.gaps.sum_survivor_decrease = total.surv;
        s.gaps.sum_gap_length = total.gaplen;
        for (int g = 0; g < gap_count; ++g) {
            double survivors = static_cast<double>(sup - g - 1);
            double during = static_cast<double>(sup - g);
            double runs_d = static_cast<double>(runs);
            s.gaps.survivor_mean_decrease.push_back(
                survivors > 0 ? static_cast<double>(total.surv[g]) / (runs_d * survivors)
                              : 0.0);
            s.gaps.uniform_share.push_back(static_cast<double>(total.gaplen[g]) /
                                           (runs_d * during));
        }
    }
    return s;
}

TauEstimate estimate_tau(const Assortment& a, std::uint64_t runs,
                         std::uint64_t master_seed, int threads) {
    if (!a.all_positive())
        throw std::domain_error("first-emptying time needs every type positive");
    if (runs == 0) throw std::domain_error("runs must be positive");
    if (threads < 1) threads = 1;
    const int k = a.k();

    auto chunk = [&](std::uint64_t begin, std::uint64_t end, std::int64_t& sum,
                     std::int64_t& sum_sq) {
        std::vector<int> state(k);
        for (std::uint64_t r = begin; r < end; ++r) {
            SplitMix64 rng(child_seed(master_seed, r));
            state = a.stocks;
            std::int64_t t = 0;
            for (;;) {
                ++t;
                size_t j = rng.next_below(static_cast<std::uint64_t>(k));
                if (--state[j] == 0) break;
            }
            sum += t;
            sum_sq += t * t;
        }
    };

    std::int64_t sum = 0, sum_sq = 0;
    if (threads == 1 || runs < 2 * static_cast<std::uint64_t>(threads)) {
        chunk(0, runs, sum, sum_sq);
    } else {
        std::vector<std::int64_t> sums(threads, 0), sqs(threads, 0);
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) {
            std::uint64_t begin = runs * i / threads;
            std::uint64_t end = runs * (i + 1) / threads;
            pool.emplace_back([&, begin, end, i] { chunk(begin, end, sums[i], sqs[i]); });
        }
        for (auto& th : pool) th.join();
        for (int i = 0; i < threads; ++i) {
            sum += sums[i];
            sum_sq += sqs[i];
        }
    }

    TauEstimate e;
    e.runs = runs;
    e.sum = sum;
    e.sum_sq = sum_sq;
    e.mean = static_cast<double>(sum) / static_cast<double>(runs);
    e.variance = variance_from_sums(sum, sum_sq, runs);
    e.se = std::sqrt(e.variance / static_cast<double>(runs));
    return e;
}

}  // namespace goodies
