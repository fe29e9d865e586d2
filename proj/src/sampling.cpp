#include "goodies/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goodies {

Assortment sample_uniform_box(int k, int lo, int hi, SplitMix64& rng) {
    if (k < 1) throw std::domain_error("need at least one type");
    if (lo < 1 || lo > hi) throw std::domain_error("need 1 <= lo <= hi");
    std::vector<int> stocks(k);
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo + 1);
    for (int i = 0; i < k; ++i)
        stocks[i] = lo + static_cast<int>(rng.next_below(width));
    return Assortment(std::move(stocks));
}

Assortment sample_composition(int k, int total, SplitMix64& rng) {
    if (k < 1) throw std::domain_error("need at least one type");
    if (total < k) throw std::domain_error("total must be at least the type count");
    // partial Fisher-Yates: the first k-1 entries of cuts become a uniform
    // (k-1)-subset of {1, ..., total-1}
    std::vector<int> cuts(total - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    for (int i = 0; i < k - 1; ++i) {
        size_t j = i + static_cast<size_t>(rng.next_below(cuts.size() - i));
        std::swap(cuts[i], cuts[j]);
    }
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> stocks(k);
    int prev = 0;
    for (int i = 0; i < k - 1; ++i) {
        stocks[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    stocks[k - 1] = total - prev;
    return Assortment(std::move(stocks));
}

}  // namespace goodies
