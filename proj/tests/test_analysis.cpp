#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "goodies/analysis.hpp"

using namespace goodies;

TEST_CASE("spread") {
    CHECK(spread(Assortment({3, 4, 2})) == 2);
    CHECK(spread(Assortment({2, 2})) == 0);
    CHECK(spread(Assortment({5, 0})) == 5);
}

TEST_CASE("assortment enumeration sizes") {
    CHECK(all_assortments(8, 3).size() == 10);          // partitions into <= 3 parts
    CHECK(all_positive_assortments(8, 3).size() == 5);  // exactly 3 parts
    CHECK(all_assortments(1, 4).size() == 1);
    for (auto& a : all_assortments(9, 3)) {
        CHECK(a.total() == 9);
        CHECK(std::is_sorted(a.stocks.begin(), a.stocks.end(), std::greater<int>()));
    }
}

TEST_CASE("optimal assortments for tiny instances") {
    ExactEngine e;
    auto opt42 = optimal_assortments(4, 2, e);
    REQUIRE(opt42.size() == 1);
    CHECK(opt42[0].stocks == std::vector<int>{2, 2});

    auto opt22 = optimal_assortments(2, 2, e);
    REQUIRE(opt22.size() == 1);
    CHECK(opt22[0].stocks == std::vector<int>{1, 1});

    auto opt73 = optimal_assortments(7, 3, e);
    REQUIRE(opt73.size() == 1);
    CHECK(opt73[0].stocks == std::vector<int>{3, 2, 2});

    auto opt13 = optimal_assortments(1, 3, e);
    REQUIRE(opt13.size() == 1);
    CHECK(opt13[0].stocks == std::vector<int>{1, 0, 0});
}

TEST_CASE("balanced minimizers survive a quick sweep") {
    ExactEngine e;
    SweepReport r2 = check_conjecture(2, 12, e);
    CHECK(r2.ok());
    CHECK(r2.instances > 0);
    REQUIRE(r2.has_min_slack);
    CHECK(r2.min_slack > 0);

    SweepReport r3 = check_conjecture(3, 12, e);
    CHECK(r3.ok());
    CHECK(r3.instances > 0);
}

TEST_CASE("inequality sweeps are clean at bound 18 with the expected sizes") {
    ExactEngine e;
    struct Expect {
        Lemma id;
        long instances;
    };
    // instance counts double-check the side-condition transcription
    for (auto [id, instances] : {Expect{Lemma::add_to_min, 64}, {Lemma::dilt, 408},
                                 {Lemma::ditt, 27}, {Lemma::dtp, 147},
                                 {Lemma::ctt, 64}, {Lemma::thtb, 81},
                                 {Lemma::ohob, 81}}) {
        SweepReport r = check_lemma(id, 18, e);
        INFO(lemma_name(id));
        CHECK(r.ok());
        CHECK(r.instances == instances);
        CHECK(r.has_min_slack);
        CHECK(r.min_slack >= 0);
    }
}

TEST_CASE("lemma names round-trip") {
    for (Lemma id : all_lemmas()) {
        Lemma back;
        REQUIRE(lemma_from_name(lemma_name(id), back));
        CHECK(back == id);
    }
    Lemma ignore;
    CHECK_FALSE(lemma_from_name("nope", ignore));
}

TEST_CASE("transfer sweep finds the known weak counterexamples and no strict ones") {
    ExactEngine e;
    TransferSweeps sweeps = find_transfer_counterexamples(18, e);

    CHECK(sweeps.strict.ok());
    CHECK(sweeps.strict.instances > 0);
    CHECK_FALSE(sweeps.weak.ok());
    CHECK(sweeps.weak.instances > sweeps.strict.instances);

    auto has_move = [&](std::vector<int> src, std::vector<int> dst) {
        for (const auto& v : sweeps.weak.violations)
            if (v.subjects.size() == 2 && v.subjects[0].canonical() == src &&
                v.subjects[1].canonical() == dst)
                return true;
        return false;
    };
    CHECK(has_move({5, 3, 1}, {5, 2, 2}));
    CHECK(has_move({8, 7, 2}, {8, 6, 3}));
    // the no-op move (levels one apart) must not be reported as a violation
    for (const auto& v : sweeps.weak.violations) {
        REQUIRE(v.subjects.size() == 2);
        CHECK(v.subjects[0].canonical() != v.subjects[1].canonical());
    }
}

TEST_CASE("strict transfers stay clean a bit further out") {
    ExactEngine e;
    TransferSweeps sweeps = find_transfer_counterexamples(24, e);
    CHECK(sweeps.strict.ok());
    REQUIRE(sweeps.strict.has_min_slack);
    CHECK(sweeps.strict.min_slack >= 0);
}
