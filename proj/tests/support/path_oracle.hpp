#pragma once

// Test-only oracle for the joint (first-emptied type, round) law: walks the
// full k-ary draw tree with exact path probabilities, stopping each branch
// at its first zero. Deliberately shares nothing with the counting-based
// construction in the library.

#include <map>
#include <utility>
#include <vector>

#include "goodies/arith.hpp"
#include "goodies/assortment.hpp"

namespace goodies_test {

inline std::map<std::pair<int, long>, goodies::Rational> path_joint(
    const goodies::Assortment& a) {
    using goodies::Rational;
    struct Node {
        std::vector<int> state;
        Rational prob;
        long t;
    };
    const int k = a.k();
    std::map<std::pair<int, long>, Rational> out;
    std::vector<Node> stack;
    stack.push_back({a.stocks, Rational(1), 0});
    while (!stack.empty()) {
        Node n = std::move(stack.back());
        stack.pop_back();
        int zero = -1;
        for (int i = 0; i < k; ++i)
            if (n.state[i] == 0) {
                zero = i;
                break;
            }
        if (zero >= 0) {  // branches stop at the first zero, so it is unique
            out[{zero, n.t}] += n.prob;
            continue;
        }
        Rational p = n.prob / k;
        for (int i = 0; i < k; ++i) {
            Node c = n;
            --c.state[i];
            c.prob = p;
            ++c.t;
            stack.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace goodies_test
