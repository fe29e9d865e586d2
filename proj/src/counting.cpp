#include "goodies/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace goodies {

Int binomial(long n, long r) {
    if (r < 0 || r > n || n < 0) return Int(0);
    if (r > n - r) r = n - r;
    Int c(1);
    for (long t = 1; t <= r; ++t) {
        c *= n - r + t;
        c /= t;  // exact: c is a binomial at every step
    }
    return c;
}

Int ColoringCounter::count(long i, std::vector<int> caps) {
    if (i < 0) return Int(0);
    for (int m : caps)
        if (m <= 0) return Int(0);
    std::sort(caps.begin(), caps.end(), std::greater<int>());
    long slack = 0;  // max feasible length: each color at most caps[c]-1 uses
    for (int m : caps) slack += m - 1;
    if (i > slack) return Int(0);
    if (caps.empty()) return Int(i == 0 ? 1 : 0);

    auto key = std::make_pair(i, caps);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // peel the first cap: r is the usage count of that color, the C(i, r)
    // factor places those r draws among the i rounds
    const int m = caps.front();
    std::vector<int> rest(caps.begin() + 1, caps.end());
    Int acc(0);
    for (long r = 0; r < m && r <= i; ++r) acc += binomial(i, r) * count(i - r, rest);
    memo_.emplace(std::move(key), acc);
    return acc;
}

Int count_first_empty(const Assortment& a, int type, long t) {
    if (!a.all_positive())
        throw std::domain_error("first-emptying counts need every type positive");
    if (type < 0 || type >= a.k()) throw std::domain_error("type out of range");
    if (t < 1) return Int(0);
    const long n = a.stocks[type];
    std::vector<int> others;
    for (int j = 0; j < a.k(); ++j)
        if (j != type) others.push_back(a.stocks[j]);
    ColoringCounter counter;
    return binomial(t - 1, n - 1) * counter.count(t - n, others);
}

Rational JointDistribution::total() const {
    Rational s(0);
    for (const auto& [key, p] : prob) s += p;
    return s;
}

Rational JointDistribution::marginal_type(int type) const {
    Rational s(0);
    for (const auto& [key, p] : prob)
        if (key.first == type) s += p;
    return s;
}

Rational JointDistribution::cumulative(int type, long t) const {
    Rational s(0);
    for (const auto& [key, p] : prob)
        if (key.first == type && key.second <= t) s += p;
    return s;
}

JointDistribution joint_first_empty(const Assortment& a) {
    if (!a.all_positive())
        throw std::domain_error("joint first-emptying law needs every type positive");
    const int k = a.k();
    const long total = a.total();
    JointDistribution d;
    d.k = k;
    d.t_min = a.min_stock();
    d.t_max = total - k + 1;  // beyond this every type would have emptied

    ColoringCounter counter;
    for (int type = 0; type < k; ++type) {
        const long n = a.stocks[type];
        std::vector<int> others;
        for (int j = 0; j < k; ++j)
            if (j != type) others.push_back(a.stocks[j]);
        for (long t = n; t <= d.t_max; ++t) {
            Int c = binomial(t - 1, n - 1) * counter.count(t - n, others);
            if (c == 0) continue;
            Int denom = boost::multiprecision::pow(Int(k), static_cast<unsigned>(t));
            d.prob.emplace(std::make_pair(type, t), Rational(c, denom));
        }
    }
    return d;
}

}  // namespace goodies
