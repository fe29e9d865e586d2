#include "goodies/k2.hpp"

#include <stdexcept>

#include "goodies/counting.hpp"

namespace goodies {

namespace {

Rational half_pow(long e) {  // (1/2)^e
    return Rational(Int(1), Int(1) << static_cast<unsigned>(e));
}

}  // namespace

Rational prob_survivor_leftover(int n1, int n2, int which, int r) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("both stocks must be positive");
    if (which != 1 && which != 2) throw std::domain_error("survivor is 1 or 2");
    const int ns = which == 1 ? n1 : n2;
    if (r < 1 || r > ns) return Rational(0);
    const long total = n1 + n2;
    // the other type's last item goes at round total - r; the survivor's
    // ns - r served items fill ns - r of the remaining total - r - 1 rounds
    return Rational(binomial(total - r - 1, ns - r), Int(1)) * half_pow(total - r);
}

Rational prob_survivor(int n1, int n2, int which) {
    Rational s(0);
    const int ns = which == 1 ? n1 : n2;
    for (int r = 1; r <= ns; ++r) s += prob_survivor_leftover(n1, n2, which, r);
    return s;
}

K2Decomposition k2_decompose(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::domain_error("both stocks must be positive");
    const long total = n1 + n2;
    K2Decomposition d;
    d.n1 = n1;
    d.n2 = n2;
    d.p1 = prob_survivor(n1, n2, 1);
    d.p2 = prob_survivor(n1, n2, 2);
    // E[u; survivor = c] collapses, via the telescoping between consecutive
    // leftover counts, to a two-term closed form
    d.e1 = Rational(2 * n1 - total) * d.p1 +
           Rational(total - 1) * prob_survivor_leftover(n1, n2, 1, 1);
    d.e2 = Rational(2 * n2 - total) * d.p2 +
           Rational(total - 1) * prob_survivor_leftover(n1, n2, 2, 1);
    d.first_term = Rational(n1 - n2) * (d.p1 - d.p2);
    d.second_term = Rational(total - 1) *
                    Rational(binomial(total - 2, n1 - 1), Int(1)) * half_pow(total - 2);
    d.expected_unhappy = d.e1 + d.e2;
    return d;
}

bool k2_sign_claim_holds(int n1, int n2) {
    return k2_decompose(n1, n2).first_term >= 0;
}

}  // namespace goodies
