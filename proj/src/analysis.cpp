#include "goodies/analysis.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace goodies {

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accumulates sweep bookkeeping: instance count, lowest margin, violations.
struct SweepAcc {
    SweepReport r;

    void record(const Rational& slack, std::vector<Assortment> subjects,
                std::vector<std::string> values, const char* violation_note) {
        ++r.instances;
        if (!r.has_min_slack || slack < r.min_slack) {
            r.has_min_slack = true;
            r.min_slack = slack;
            r.min_slack_witness = subjects;
        }
        if (slack < 0)
            r.violations.push_back(
                {std::move(subjects), std::move(values), violation_note});
    }
};

Assortment asrt(std::vector<int> v) { return Assortment(std::move(v)); }

}  // namespace

std::vector<Assortment> all_assortments(int total, int k) {
    std::vector<Assortment> out;
    std::vector<int> cur(k);
    // nonincreasing fill; v*(k-idx) >= remaining keeps the tail feasible
    std::function<void(int, int, int)> go = [&](int idx, int remaining, int cap) {
        if (idx == k - 1) {
            if (remaining <= cap) {
                cur[idx] = remaining;
                out.push_back(asrt(cur));
            }
            return;
        }
        for (int v = std::min(cap, remaining); v >= 0 && v * (k - idx) >= remaining; --v) {
            cur[idx] = v;
            go(idx + 1, remaining - v, v);
        }
    };
    go(0, total, total);
    return out;
}

std::vector<Assortment> all_positive_assortments(int total, int k) {
    std::vector<Assortment> out;
    for (auto& a : all_assortments(total, k))
        if (a.all_positive()) out.push_back(std::move(a));
    return out;
}

std::vector<Assortment> optimal_assortments(int total, int k, ExactEngine& engine) {
    std::vector<Assortment> out;
    Rational best;
    bool first = true;
    for (auto& a : all_assortments(total, k)) {
        Rational eu = Rational(a.total()) - engine.happy_exact(a);
        if (first || eu < best) {
            best = std::move(eu);
            out.clear();
            out.push_back(std::move(a));
            first = false;
        } else if (eu == best) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

SweepReport check_conjecture(int k, int total_max, ExactEngine& engine) {
    SweepAcc acc;
    acc.r.predicate = "balanced-assortment-minimizes-expected-unhappy";
    {
        std::ostringstream os;
        os << "k=" << k << ", total=1.." << total_max;
        acc.r.range = os.str();
    }
    for (int total = 1; total <= total_max; ++total) {
        std::vector<int> balanced(k, total / k);
        for (int i = 0; i < total % k; ++i) ++balanced[i];
        Assortment bal = asrt(balanced);
        Rational eu_bal = Rational(total) - engine.happy_exact(bal);
        for (auto& cand : all_assortments(total, k)) {
            if (cand.stocks == balanced) continue;
            Rational eu = Rational(total) - engine.happy_exact(cand);
            acc.record(eu - eu_bal, {bal, cand}, {rat_str(eu_bal), rat_str(eu)},
                       "unbalanced assortment strictly beats the balanced one");
        }
    }
    return std::move(acc.r);
}

const char* lemma_name(Lemma id) {
    switch (id) {
        case Lemma::add_to_min: return "add-to-min";
        case Lemma::dilt: return "dilt";
        case Lemma::ditt: return "ditt";
        case Lemma::dtp: return "dtp";
        case Lemma::ctt: return "ctt";
        case Lemma::thtb: return "thtb";
        case Lemma::ohob: return "ohob";
    }
    return "?";
}

bool lemma_from_name(const std::string& name, Lemma& out) {
    for (Lemma id : all_lemmas())
        if (name == lemma_name(id)) {
            out = id;
            return true;
        }
    return false;
}

std::vector<Lemma> all_lemmas() {
    return {Lemma::add_to_min, Lemma::dilt, Lemma::ditt, Lemma::dtp,
            Lemma::ctt,        Lemma::thtb, Lemma::ohob};
}

SweepReport check_lemma(Lemma id, int bound, ExactEngine& engine) {
    SweepAcc acc;
    acc.r.predicate = lemma_name(id);
    {
        std::ostringstream os;
        os << "all side-condition tuples with left-hand total <= " << bound;
        acc.r.range = os.str();
    }
    auto h = [&](std::vector<int> v) -> Rational {
        return engine.happy_exact(asrt(std::move(v)));
    };
    auto rec = [&](const Rational& slack, std::vector<int> lhs, std::vector<int> rhs,
                   const Rational& lv, const Rational& rv) {
        acc.record(slack, {asrt(std::move(lhs)), asrt(std::move(rhs))},
                   {rat_str(lv), rat_str(rv)}, "inequality fails");
    };

    switch (id) {
        case Lemma::add_to_min:
            for (int s = 1; s <= bound; ++s)
                for (int l = s + 1; s + 1 + l <= bound; ++l) {
                    Rational lv = h({s + 1, l}), rv = h({s, l + 1});
                    rec(lv - rv, {s + 1, l}, {s, l + 1}, lv, rv);
                }
            break;
        case Lemma::dilt:
            for (int s = 0; s <= bound; ++s)
                for (int m = s; m <= bound; ++m)
                    for (int l = m + 1; l + m + s + 1 <= bound; ++l) {
                        Rational rv = h({l + 1, m, s});
                        Rational lv1 = h({l, m + 1, s});
                        rec(lv1 - rv, {l, m + 1, s}, {l + 1, m, s}, lv1, rv);
                        Rational lv2 = h({l, m, s + 1});
                        rec(lv2 - rv, {l, m, s + 1}, {l + 1, m, s}, lv2, rv);
                    }
            break;
        case Lemma::ditt:
            for (int s = 0; s <= bound; ++s)
                for (int l = s + 1; 2 * l + s + 1 <= bound; ++l) {
                    Rational lv = h({l, l, s + 1}), rv = h({l + 1, l, s});
                    rec(lv - rv, {l, l, s + 1}, {l + 1, l, s}, lv, rv);
                }
            break;
        case Lemma::dtp:
            for (int s = 0; s <= bound; ++s)
                for (int m = s + 2; m <= bound; ++m)
                    for (int l = m; l + m + s <= bound; ++l) {
                        Rational lv = h({l, m, s}), rv = h({l - 1, m - 1, s + 2});
                        rec(rv - lv, {l, m, s}, {l - 1, m - 1, s + 2}, lv, rv);
                    }
            break;
        case Lemma::ctt:
            for (int m = 2; m <= bound; ++m)
                for (int l = m; l + m <= bound; ++l) {
                    Rational lv = h({l, m, 0}), rv = h({l - 1, m - 1, 2});
                    rec(rv - lv, {l, m, 0}, {l - 1, m - 1, 2}, lv, rv);
                }
            break;
        case Lemma::thtb:
            for (int m = 1; m <= bound; ++m)
                for (int l = m; l + m <= bound; ++l) {
                    Rational lv = h({l, m, 0}), rv = h({l - 1, m - 1, 0}) + 2;
                    rec(rv - lv, {l, m, 0}, {l - 1, m - 1, 0}, lv, rv);
                }
            break;
        case Lemma::ohob:
            for (int m = 1; m <= bound; ++m)
                for (int l = m; l + m <= bound; ++l) {
                    Rational lv = h({l, m, 0}), rv = h({l - 1, m - 1, 1}) + 1;
                    rec(rv - lv, {l, m, 0}, {l - 1, m - 1, 1}, lv, rv);
                }
            break;
    }
    return std::move(acc.r);
}

TransferSweeps find_transfer_counterexamples(int bound, ExactEngine& engine) {
    SweepAcc weak, strict;
    weak.r.predicate = "unit-transfer-larger-to-smaller-never-increases-unhappy";
    strict.r.predicate = "unit-transfer-max-to-min-never-increases-unhappy";
    {
        std::ostringstream os;
        os << "k=3, total<=" << bound << ", moves between distinct stock levels";
        weak.r.range = os.str();
        strict.r.range = os.str();
    }
    auto h = [&](const Assortment& a) -> const Rational& {
        return engine.happy_exact(a);
    };

    for (int total = 1; total <= bound; ++total) {
        for (auto& src : all_assortments(total, 3)) {
            std::vector<int> levels = src.stocks;  // sorted nonincreasing
            std::vector<int> uniq;
            for (int v : levels)
                if (uniq.empty() || uniq.back() != v) uniq.push_back(v);
            const Rational& h_src = h(src);

            auto apply = [&](int from, int to) {
                std::vector<int> dst = src.stocks;
                for (auto& v : dst)
                    if (v == from) {
                        --v;
                        break;
                    }
                for (auto& v : dst)
                    if (v == to) {
                        ++v;
                        break;
                    }
                return asrt(std::move(dst));
            };
            auto check = [&](SweepAcc& acc, int from, int to) {
                Assortment dst = apply(from, to);
                const Rational& h_dst = h(dst);
                // moving toward balance must not lower h (= raise unhappy)
                acc.record(h_dst - h_src, {src, dst}, {rat_str(h_src), rat_str(h_dst)},
                           "transfer toward balance increased expected unhappy");
            };

            for (size_t i = 0; i < uniq.size(); ++i)
                for (size_t j = i + 1; j < uniq.size(); ++j) {
                    if (uniq[i] == uniq[j] + 1) continue;  // permutes the multiset
                    check(weak, uniq[i], uniq[j]);
                }
            if (uniq.size() >= 2 && levels.front() - levels.back() >= 2)
                check(strict, levels.front(), levels.back());
        }
    }
    return {std::move(weak.r), std::move(strict.r)};
}

}  // namespace goodies
