#include "goodies/exact.hpp"

#include <stdexcept>
#include <utility>

namespace goodies {

namespace {

int count_positive(const std::vector<int>& key) {
    int c = 0;
    for (int v : key)
        if (v > 0) ++c;
    return c;
}

// Children of a sorted-nonincreasing state under "one chosen type gets one
// lighter", grouped by equal stock values: decrementing the last member of a
// group keeps the vector sorted, and the group size is the multiplicity of
// that child in the recursion average.
template <class Fn>
void for_each_child(const std::vector<int>& key, Fn&& fn) {
    const int k = static_cast<int>(key.size());
    for (int i = 0; i < k;) {
        int j = i;
        while (j < k && key[j] == key[i]) ++j;
        if (key[i] > 0) {
            std::vector<int> child = key;
            --child[j - 1];
            fn(std::move(child), j - i);
        }
        i = j;
    }
}

// Iterative evaluation over an explicit worklist. A state stays on the
// stack until all of its children are memoised; each state is finalized
// exactly once. `base` decides absorption and `divisor` the averaging
// weight, which is how the happy-rounds and first-emptying recursions
// differ:
//   happy: absorb when at most one type has stock, average over the support
//   tau:   absorb when some type is out of stock, average over all k types
template <class Num, class Map>
const Num& eval(const std::vector<int>& root, Map& memo, bool tau_mode) {
    std::vector<std::vector<int>> stack;
    stack.push_back(root);
    while (!stack.empty()) {
        // copy: pushing children below may reallocate the stack
        const std::vector<int> key = stack.back();
        if (memo.find(key) != memo.end()) {
            stack.pop_back();
            continue;
        }
        const int sup = count_positive(key);
        const bool absorbed =
            tau_mode ? sup < static_cast<int>(key.size()) : sup <= 1;
        if (absorbed) {
            stack.pop_back();
            memo.emplace(key, Num(0));
            continue;
        }
        bool ready = true;
        for_each_child(key, [&](std::vector<int> child, int) {
            if (memo.find(child) == memo.end()) {
                ready = false;
                stack.push_back(std::move(child));
            }
        });
        if (!ready) continue;  // children first; key is revisited afterwards
        const int divisor = tau_mode ? static_cast<int>(key.size()) : sup;
        Num acc(0);
        for_each_child(key, [&](std::vector<int> child, int mult) {
            acc += memo.at(child) * mult;
        });
        stack.pop_back();
        memo.emplace(key, Num(Num(1) + acc / Num(divisor)));
    }
    return memo.at(root);
}

}  // namespace

Value ExactEngine::expected_happy(const Assortment& a, Mode mode) {
    if (mode == Mode::rational) return Value::of(happy_exact(a));
    return Value::of(happy_float(a));
}

Value ExactEngine::expected_unhappy(const Assortment& a, Mode mode) {
    if (mode == Mode::rational)
        return Value::of(Rational(a.total()) - happy_exact(a));
    return Value::of(static_cast<double>(a.total()) - happy_float(a));
}

Value ExactEngine::expected_tau(const Assortment& a, Mode mode) {
    if (mode == Mode::rational) return Value::of(tau_exact(a));
    return Value::of(tau_float(a));
}

const Rational& ExactEngine::happy_exact(const Assortment& a) {
    return eval<Rational>(a.canonical(), happy_rat_, false);
}

const Rational& ExactEngine::tau_exact(const Assortment& a) {
    return eval<Rational>(a.canonical(), tau_rat_, true);
}

double ExactEngine::happy_float(const Assortment& a) {
    return eval<double>(a.canonical(), happy_flt_, false);
}

double ExactEngine::tau_float(const Assortment& a) {
    return eval<double>(a.canonical(), tau_flt_, true);
}

size_t ExactEngine::memo_size() const {
    return happy_rat_.size() + tau_rat_.size() + happy_flt_.size() + tau_flt_.size();
}

namespace {

enum class BruteStat { happy, unhappy, tau };

// Full decision-tree enumeration with per-branch probability products; the
// deliberately unshared cross-check for the engine above.
Rational brute_force(const Assortment& a, long max_total, BruteStat stat) {
    if (a.total() > max_total)
        throw std::domain_error("decision tree too large; raise max_total knowingly");
    if (stat == BruteStat::tau && !a.all_positive())
        throw std::domain_error("first-emptying time needs every type positive");

    struct Node {
        std::vector<int> state;
        Rational prob;
        long t;
    };
    const int k = a.k();
    Rational expect(0);
    std::vector<Node> stack;
    stack.push_back({a.stocks, Rational(1), 0});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        std::vector<int> sup;
        for (int i = 0; i < k; ++i)
            if (node.state[i] > 0) sup.push_back(i);

        if (stat == BruteStat::tau) {
            if (static_cast<int>(sup.size()) < k) {  // first zero just appeared
                expect += node.prob * node.t;
                continue;
            }
        } else if (sup.size() <= 1) {
            if (stat == BruteStat::happy) {
                expect += node.prob * node.t;
            } else {
                long leftover = 0;
                for (int v : node.state) leftover += v;
                expect += node.prob * leftover;
            }
            continue;
        }

        const int branches =
            stat == BruteStat::tau ? k : static_cast<int>(sup.size());
        Rational p = node.prob / branches;
        auto expand = [&](int type) {
            Node next = node;
            --next.state[type];
            next.prob = p;
            ++next.t;
            stack.push_back(std::move(next));
        };
        if (stat == BruteStat::tau)
            for (int i = 0; i < k; ++i) expand(i);
        else
            for (int i : sup) expand(i);
    }
    return expect;
}

}  // namespace

Rational brute_force_expected_happy(const Assortment& a, long max_total) {
    return brute_force(a, max_total, BruteStat::happy);
}

Rational brute_force_expected_unhappy(const Assortment& a, long max_total) {
    return brute_force(a, max_total, BruteStat::unhappy);
}

Rational brute_force_expected_tau(const Assortment& a, long max_total) {
    return brute_force(a, max_total, BruteStat::tau);
}

}  // namespace goodies
