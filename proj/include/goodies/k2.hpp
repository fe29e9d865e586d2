#pragma once

#include "goodies/arith.hpp"

namespace goodies {

// Closed forms for the two-type process with stocks (n1, n2), all exact.
// "Survivor" is the type still in stock when the other runs out; r is its
// leftover count at that moment (these r attendees' worth of stock is the
// unhappy mass of the run, since with two types every unhappy attendee
// corresponds to leftover stock of the survivor).

// Pr[survivor = which with exactly r left]; `which` is 1 or 2. Zero outside
// 1 <= r <= (stock of the survivor).
Rational prob_survivor_leftover(int n1, int n2, int which, int r);

// Pr[survivor = which], the sum over r.
Rational prob_survivor(int n1, int n2, int which);

// Split of the expected unhappy count for two types.
//   p1, p2:      survivor probabilities, p1 + p2 = 1
//   e1, e2:      E[unhappy restricted to survivor = 1 resp. 2], e1 + e2 = E[u]
//   first_term:  (n1 - n2) * (p1 - p2)
//   second_term: (n1 + n2 - 1) * C(n1 + n2 - 2, n1 - 1) * (1/2)^(n1 + n2 - 2)
// first_term + second_term = E[u] as well; first_term is conjectured (and
// here checked) to be nonnegative, so E[u] >= second_term.
struct K2Decomposition {
    int n1 = 0, n2 = 0;
    Rational p1, p2;
    Rational e1, e2;
    Rational first_term, second_term;
    Rational expected_unhappy;
};

// Requires n1, n2 >= 1.
K2Decomposition k2_decompose(int n1, int n2);

// first_term >= 0; the heavier pile is the likelier survivor.
bool k2_sign_claim_holds(int n1, int n2);

}  // namespace goodies
