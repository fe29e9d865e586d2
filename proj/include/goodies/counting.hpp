#pragma once

#include <map>
#include <utility>
#include <vector>

#include "goodies/arith.hpp"
#include "goodies/assortment.hpp"

namespace goodies {

// Exact binomial coefficient; 0 outside 0 <= r <= n.
Int binomial(long n, long r);

// Counts draw sequences under per-color usage caps. count(i, caps) is the
// number of length-i sequences over one color per cap in which color c
// appears strictly fewer than caps[c] times. Memoised on (i, sorted caps);
// the cap vector is symmetric in its entries.
//
// Conventions: i < 0 counts nothing; i = 0 with no caps counts the empty
// sequence once; any cap <= 0 admits no sequence at all (even the empty one
// uses that color zero times, which is not fewer than zero).
class ColoringCounter {
public:
    Int count(long i, std::vector<int> caps);
    size_t memo_size() const { return memo_.size(); }

private:
    std::map<std::pair<long, std::vector<int>>, Int> memo_;
};

// Number of equally likely draw sequences of length t, over all k types,
// in which `type` is the first to run out and does so exactly at round t:
// the final draw is the n_type-th draw of `type`, the earlier t-1 rounds
// contain the other n_type - 1 of them, and every other type stays below
// its stock. Each sequence has probability (1/k)^t.
// Requires every type positive.
Int count_first_empty(const Assortment& a, int type, long t);

// Joint distribution of (first-emptied type, first-emptying round tau).
struct JointDistribution {
    int k = 0;
    long t_min = 0, t_max = 0;  // tau is supported inside [t_min, t_max]
    std::map<std::pair<int, long>, Rational> prob;  // zero entries omitted

    Rational total() const;                    // should be exactly 1
    Rational marginal_type(int type) const;    // Pr[first empty = type]
    Rational cumulative(int type, long t) const;  // Pr[first empty = type, tau <= t]
};

// Exact joint law assembled from count_first_empty over the whole support
// window. Requires every type positive.
JointDistribution joint_first_empty(const Assortment& a);

}  // namespace goodies
