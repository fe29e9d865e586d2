#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "goodies/arith.hpp"
#include "goodies/assortment.hpp"

namespace goodies {

// Arithmetic mode for expectation values: exact rationals or IEEE doubles.
// The float path runs the same recursion and exists for scale; sweeps that
// certify inequalities must use Mode::rational.
enum class Mode { rational, real };

// Exact-or-float scalar. `exact` is meaningful in Mode::rational, `approx`
// in Mode::real; to_double() works in both.
struct Value {
    Mode mode = Mode::rational;
    Rational exact;
    double approx = 0;

    static Value of(Rational r) {
        Value v;
        v.mode = Mode::rational;
        v.approx = goodies::to_double(r);
        v.exact = std::move(r);
        return v;
    }
    static Value of(double d) {
        Value v;
        v.mode = Mode::real;
        v.approx = d;
        return v;
    }
    double to_double() const { return mode == Mode::rational ? goodies::to_double(exact) : approx; }
};

// Dynamic programs for the expectations of the urn process, memoised on the
// sorted stock vector (every expectation here is permutation symmetric).
// Evaluation is iterative over an explicit worklist, never call-recursive,
// so deep states (large totals) cannot overflow the machine stack. Memos
// persist for the lifetime of the engine and are shared across queries.
class ExactEngine {
public:
    // expected happy attendees h: h = 0 when at most one type has stock,
    // else 1 + average of h over the states one uniformly chosen in-stock
    // type lighter.
    Value expected_happy(const Assortment& a, Mode mode = Mode::rational);

    // expected unhappy attendees, total - h
    Value expected_unhappy(const Assortment& a, Mode mode = Mode::rational);

    // expected first-emptying time E[tau]: 0 when some type is already
    // empty, else 1 + average over all k types of the state one lighter.
    // This is the recursion for drawing uniformly over all k types until the
    // first zero; in particular for k = 1 it gives E[tau] = n (the single
    // pile is drawn down to zero), and for k = 2 every draw before the first
    // zero is also a happy round, so E[tau] equals h.
    Value expected_tau(const Assortment& a, Mode mode = Mode::rational);

    // exact accessors used heavily by the sweeps (no Value wrapping)
    const Rational& happy_exact(const Assortment& a);
    const Rational& tau_exact(const Assortment& a);
    double happy_float(const Assortment& a);
    double tau_float(const Assortment& a);

    size_t memo_size() const;

private:
    struct VecHash {
        size_t operator()(const std::vector<int>& v) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ull ^ v.size();
            for (int x : v)
                h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ull;
            return static_cast<size_t>(h);
        }
    };
    template <class Num>
    using Memo = std::unordered_map<std::vector<int>, Num, VecHash>;

    Memo<Rational> happy_rat_, tau_rat_;
    Memo<double> happy_flt_, tau_flt_;
};

// Independent oracle: enumerates the full decision tree of the process with
// per-branch probability products. No memo, no symmetry reduction, nothing
// shared with ExactEngine beyond the model itself. Cost is exponential in
// the total stock; calls beyond max_total are refused with
// std::domain_error. Zero entries are allowed (they simply never appear in
// the support).
Rational brute_force_expected_happy(const Assortment& a, long max_total = 14);
Rational brute_force_expected_unhappy(const Assortment& a, long max_total = 14);
// Requires every type positive; accumulates the round of the first zero.
Rational brute_force_expected_tau(const Assortment& a, long max_total = 14);

}  // namespace goodies
