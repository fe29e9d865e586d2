#pragma once

#include <string>
#include <vector>

#include "goodies/arith.hpp"
#include "goodies/assortment.hpp"
#include "goodies/exact.hpp"

namespace goodies {

inline int spread(const Assortment& a) { return a.max_stock() - a.min_stock(); }

// One failed check inside a sweep: the states involved, their exact values
// rendered as strings, and a short note saying what was expected.
struct Violation {
    std::vector<Assortment> subjects;
    std::vector<std::string> values;
    std::string note;
};

// Outcome of an exhaustive exact sweep of one inequality over a range.
// min_slack is the smallest margin seen across all checks (negative exactly
// when violations exist); its witness pins down the tightest instance.
struct SweepReport {
    std::string predicate;
    std::string range;
    long instances = 0;
    std::vector<Violation> violations;
    bool has_min_slack = false;
    Rational min_slack;
    std::vector<Assortment> min_slack_witness;
    bool ok() const { return violations.empty(); }
};

// Every way to fill k nonnegative entries summing to total, one
// representative per permutation orbit (entries nonincreasing).
std::vector<Assortment> all_assortments(int total, int k);
// Same but every entry positive.
std::vector<Assortment> all_positive_assortments(int total, int k);

// All minimizers of expected unhappy attendees among the k-type assortments
// with the given total, canonical representatives, exact comparison.
std::vector<Assortment> optimal_assortments(int total, int k, ExactEngine& engine);

// Checks, for every total up to total_max, that the balanced assortment
// (all entries within one of each other) minimizes expected unhappy
// attendees. Slack for a total is the smallest excess of any unbalanced
// assortment over the balanced one.
SweepReport check_conjecture(int k, int total_max, ExactEngine& engine);

// Proven monotonicity inequalities for h, swept exhaustively so a
// regression in the engine (or a wrong transcription of a side condition)
// cannot hide. Names describe the move being compared.
//   add_to_min: two types, l > s > 0:   h(s+1, l) >= h(s, l+1)
//   dilt: l > m >= s >= 0:              h(l, m+1, s) >= h(l+1, m, s)
//                                  and  h(l, m, s+1) >= h(l+1, m, s)
//   ditt: l > s >= 0:                   h(l, l, s+1) >= h(l+1, l, s)
//   dtp:  l >= m >= s >= 0, m >= s+2:   h(l, m, s) <= h(l-1, m-1, s+2)
//   ctt:  l >= m >= 2:                  h(l, m, 0) <= h(l-1, m-1, 2)
//   thtb: l >= m > 0:                   h(l, m, 0) <= h(l-1, m-1, 0) + 2
//   ohob: l >= m > 0:                   h(l, m, 0) <= h(l-1, m-1, 1) + 1
enum class Lemma { add_to_min, dilt, ditt, dtp, ctt, thtb, ohob };

const char* lemma_name(Lemma id);
bool lemma_from_name(const std::string& name, Lemma& out);
std::vector<Lemma> all_lemmas();

// Sweeps one inequality over every tuple whose left-hand side total is at
// most bound. Exact arithmetic throughout.
SweepReport check_lemma(Lemma id, int bound, ExactEngine& engine);

// Transfer sweeps over three-type assortments with total <= bound.
//   weak:   move one unit from any strictly larger pile to any strictly
//           smaller one; the tempting claim is that this never increases
//           expected unhappy attendees. Known to be false: the report's
//           violations list the counterexamples.
//   strict: same, but only from a largest pile to a smallest pile (skipping
//           moves that merely permute the multiset). No counterexample is
//           known; a violation here would be news.
struct TransferSweeps {
    SweepReport weak;
    SweepReport strict;
};
TransferSweeps find_transfer_counterexamples(int bound, ExactEngine& engine);

}  // namespace goodies
