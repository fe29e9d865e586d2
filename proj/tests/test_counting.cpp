#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "goodies/counting.hpp"
#include "support/path_oracle.hpp"

using namespace goodies;

namespace {

// direct enumeration of capped sequences, for small lengths only
long brute_sequences(long len, const std::vector<int>& caps) {
    if (len < 0) return 0;
    const int k = static_cast<int>(caps.size());
    if (len == 0) {
        for (int m : caps)
            if (m <= 0) return 0;
        return 1;
    }
    if (k == 0) return 0;
    long total = 0;
    std::vector<int> used(k, 0);
    std::vector<int> seq(len, 0);
    for (;;) {
        bool ok = true;
        std::fill(used.begin(), used.end(), 0);
        for (long i = 0; i < len && ok; ++i) {
            ++used[seq[i]];
            if (used[seq[i]] >= caps[seq[i]]) ok = false;
        }
        if (ok) ++total;
        long pos = len - 1;
        while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return total;
}

}  // namespace

TEST_CASE("binomial basics and the Pascal identity") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    for (long n = 1; n <= 40; ++n)
        for (long r = 0; r <= n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("capped sequence counts match direct enumeration") {
    ColoringCounter c;
    std::vector<std::vector<int>> cap_sets = {
        {2, 2}, {1, 3}, {2, 3, 1}, {2, 2, 2}, {3, 1}, {4}, {1, 1}, {3, 2, 2}};
    for (const auto& caps : cap_sets)
        for (long i = 0; i <= 6; ++i)
            CHECK(c.count(i, caps) == brute_sequences(i, caps));
}

TEST_CASE("capped sequence count conventions") {
    ColoringCounter c;
    CHECK(c.count(0, {}) == 1);
    CHECK(c.count(3, {}) == 0);
    CHECK(c.count(-2, {2, 2}) == 0);
    CHECK(c.count(2, {2, 2}) == 2);
    CHECK(c.count(3, {2, 2}) == 0);  // pigeonhole: at most 1+1 draws fit
    CHECK(c.count(0, {0, 3}) == 0);  // a nonpositive cap admits nothing
    CHECK(c.count(1, {1, 3}) == 1);
    CHECK(c.count(2, {1, 3}) == 1);
    // cap order is irrelevant
    CHECK(c.count(4, {2, 3, 2}) == c.count(4, {3, 2, 2}));
}

TEST_CASE("raising one cap decomposes into a boundary sum") {
    // count(i, {m+x, rest}) = count(i, {m, rest})
    //                       + sum_{r=0}^{x-1} C(i, m+r) * count(i-m-r, rest)
    ColoringCounter c;
    std::vector<std::vector<int>> rests = {{3, 2}, {4}, {2, 2}, {}};
    for (const auto& rest : rests)
        for (int m = 1; m <= 4; ++m)
            for (int x = 1; x <= 4; ++x)
                for (long i = 0; i <= 20; ++i) {
                    std::vector<int> with_big = {m + x};
                    std::vector<int> with_small = {m};
                    for (int v : rest) {
                        with_big.push_back(v);
                        with_small.push_back(v);
                    }
                    Int rhs = c.count(i, with_small);
                    for (int r = 0; r < x; ++r)
                        rhs += binomial(i, m + r) * c.count(i - m - r, rest);
                    CHECK(c.count(i, with_big) == rhs);
                }
}

TEST_CASE("first-emptying counts for the smallest asymmetric case") {
    Assortment a({1, 2});
    CHECK(count_first_empty(a, 0, 1) == 1);
    CHECK(count_first_empty(a, 0, 2) == 1);
    CHECK(count_first_empty(a, 0, 3) == 0);
    CHECK(count_first_empty(a, 1, 1) == 0);
    CHECK(count_first_empty(a, 1, 2) == 1);
    CHECK_THROWS_AS(count_first_empty(Assortment({1, 0}), 0, 1), std::domain_error);
}

TEST_CASE("joint law sums to one and matches the path oracle") {
    std::vector<std::vector<int>> cases = {{1, 2},    {2, 2},    {1, 3},
                                           {2, 3},    {2, 2, 2}, {1, 2, 3},
                                           {3, 4, 2}, {4},       {2, 1, 1, 2}};
    for (const auto& stocks : cases) {
        Assortment a(stocks);
        JointDistribution d = joint_first_empty(a);
        CHECK(d.total() == 1);
        auto oracle = goodies_test::path_joint(a);
        CHECK(d.prob.size() == oracle.size());
        for (const auto& [key, p] : oracle) {
            auto it = d.prob.find(key);
            REQUIRE(it != d.prob.end());
            CHECK(it->second == p);
            CHECK(key.second >= d.t_min);
            CHECK(key.second <= d.t_max);
        }
    }
}

TEST_CASE("joint law for a single type is a point mass") {
    JointDistribution d = joint_first_empty(Assortment({4}));
    REQUIRE(d.prob.size() == 1);
    CHECK(d.prob.at({0, 4}) == 1);
}

TEST_CASE("lighter types empty first in the cumulative sense") {
    std::vector<std::vector<int>> cases = {{1, 3}, {2, 3}, {1, 2, 3}, {3, 4, 2},
                                           {2, 5, 5}, {1, 1, 4, 4}};
    for (const auto& stocks : cases) {
        Assortment a(stocks);
        JointDistribution d = joint_first_empty(a);
        for (int i = 0; i < a.k(); ++i)
            for (int j = 0; j < a.k(); ++j) {
                if (a.stocks[i] >= a.stocks[j]) continue;
                for (long t = d.t_min; t <= d.t_max; ++t)
                    CHECK(d.cumulative(i, t) >= d.cumulative(j, t));
            }
    }
}

TEST_CASE("type marginals sum to one") {
    Assortment a({2, 3, 4});
    JointDistribution d = joint_first_empty(a);
    CHECK(d.marginal_type(0) + d.marginal_type(1) + d.marginal_type(2) == 1);
}
