#include <map>
#include <string>

#include "doctest.h"
#include "flatsurf/derivation.hpp"

using namespace flatsurf;

namespace {

CuttingSequence seq(std::vector<int> labels) {
    CuttingSequence c;
    c.labels = std::move(labels);
    return c;
}

// Table of all three-number transitions for the (3,4) surface with the
// canonical numbering, split by verdict and case.
const std::map<std::string, std::string> kTable34 = {
    {"212", "kept(00)"},  {"121", "kept(00)"},  {"434", "kept(00)"},
    {"343", "kept(00)"},  {"767", "kept(00)"},  {"676", "kept(00)"},
    {"723", "kept(11)"},  {"236", "kept(11)"},  {"654", "kept(11)"},
    {"365", "kept(11)"},  {"872", "kept(11)"},  {"187", "kept(11)"},
    {"218", "rem(01)"},   {"123", "rem(01)"},   {"721", "rem(10)"},
    {"436", "rem(01)"},   {"234", "rem(10)"},   {"543", "rem(10)"},
    {"765", "rem(01)"},   {"367", "rem(10)"},   {"672", "rem(01)"},
    {"876", "rem(10)"},
};

std::string word_key(const Word3& w) {
    return std::to_string(w.labels[0]) + std::to_string(w.labels[1]) +
           std::to_string(w.labels[2]);
}

std::string word_verdict(const Word3& w) {
    return (w.kept ? "kept(" : "rem(") + std::to_string(w.types[0]) +
           std::to_string(w.types[1]) + ")";
}

}  // namespace

TEST_CASE("(3,4) word table matches the canonical one exactly") {
    Surface s = build_bouw_moller(3, 4);
    std::vector<Word3> words = enumerate_words(s);
    CHECK(words.size() == kTable34.size());
    std::map<std::string, std::string> got;
    for (const auto& w : words) got[word_key(w)] = word_verdict(w);
    for (const auto& [word, verdict] : kTable34) {
        REQUIRE_MESSAGE(got.count(word) == 1, "missing word ", word);
        CHECK_MESSAGE(got[word] == verdict, "word ", word, ": got ", got[word],
                      " expected ", verdict);
    }
    CHECK(got.size() == kTable34.size());
}

TEST_CASE("(3,4) kept words split six sandwiched (00), six unsandwiched (11)") {
    Surface s = build_bouw_moller(3, 4);
    int kept00 = 0, kept11 = 0;
    for (const auto& w : enumerate_words(s)) {
        if (!w.kept) {
            CHECK(w.types[0] != w.types[1]);  // removed words are (01)/(10)
            continue;
        }
        if (w.types[0] == 0 && w.types[1] == 0) {
            ++kept00;
            CHECK(w.sandwiched());
        } else {
            REQUIRE(w.types[0] == 1);
            REQUIRE(w.types[1] == 1);
            ++kept11;
            CHECK(!w.sandwiched());
        }
    }
    CHECK(kept00 == 6);
    CHECK(kept11 == 6);
}

TEST_CASE("transition types resolve per polygon crossing") {
    Surface s34 = build_bouw_moller(3, 4);
    DerivationContext ctx(s34);
    // 723 has both transitions of type 1, 218 has mixed types
    CHECK(ctx.transition_type(7, 2) == 1);
    CHECK(ctx.transition_type(2, 3) == 1);
    CHECK(ctx.transition_type(2, 1) == 0);
    CHECK(ctx.transition_type(1, 8) == 1);
    CHECK_THROWS_AS(ctx.transition_type(1, 5), InadmissiblePair);

    // octagon: after the bottom edge the flow climbs into band 0
    Surface oct = build_regular_surface(8, false);
    CHECK(transition_type(oct, 1, 2) == 1);
    CHECK(transition_type(oct, 4, 4) == 0);
}

TEST_CASE("derive_combinatorial on the pinned (3,4) windows") {
    Surface s = build_bouw_moller(3, 4);
    DerivationContext ctx(s);
    CHECK(ctx.derive_combinatorial(seq({2, 1, 2})).labels == std::vector<int>{1});
    CHECK(ctx.derive_combinatorial(seq({5, 4, 3})).labels == std::vector<int>{});
    CHECK(ctx.derive_combinatorial(seq({6, 5, 4})).labels == std::vector<int>{5});
    CHECK_THROWS_AS(ctx.derive_combinatorial(seq({1, 5, 4})), InadmissiblePair);
    CHECK_THROWS_AS(ctx.derive_combinatorial(seq({1, 2})), Inadmissible);
}

TEST_CASE("sandwich rule") {
    Surface s = build_regular_surface(5, true);
    // ... C B A B D A C ...: the A between the Bs is kept
    CHECK(sandwich_derive(s, seq({3, 2, 1, 2, 4, 1, 3})).labels == std::vector<int>{1});
    // period-2 sequence: every interior letter is sandwiched
    CHECK(sandwich_derive(s, seq({1, 2, 1, 2, 1, 2})).labels ==
          std::vector<int>{2, 1, 2, 1});
    // distinct neighbors: removed
    CHECK(sandwich_derive(s, seq({1, 2, 3})).labels == std::vector<int>{});

    CHECK_THROWS_AS(sandwich_derive(build_bouw_moller(3, 4), seq({1, 2, 1})),
                    WrongFamily);
}

TEST_CASE("octagon kept words are exactly the sandwiched ones") {
    Surface s = build_regular_surface(8, false);
    for (const auto& w : enumerate_words(s)) CHECK(w.kept == w.sandwiched());
}

TEST_CASE("kept middle letters of (00)/(11) words are cylinder gluing edges") {
    for (Surface s : {build_regular_surface(8, false), build_bouw_moller(3, 4),
                      build_bouw_moller(4, 3)}) {
        for (const auto& w : enumerate_words(s)) {
            if (w.kept && !w.middle_horizontal) {
                CHECK(!label_is_horizontal(s, w.labels[1]));
                CHECK(w.types[0] == w.types[1]);
            }
        }
    }
}

TEST_CASE("edge classification") {
    Surface s = build_bouw_moller(3, 4);
    std::vector<EdgeClass> classes = classify_edges(s);
    REQUIRE(classes.size() == 8);
    int horizontal = 0;
    for (const auto& c : classes)
        if (c.kind == EdgeKind::Horizontal) ++horizontal;
    CHECK(horizontal == 2);  // labels 5 and 8
    CHECK(classes[4].kind == EdgeKind::Horizontal);
    CHECK(classes[7].kind == EdgeKind::Horizontal);
    // every gluing label has one left-side and one right-side occurrence
    for (const auto& c : classes) {
        if (c.kind == EdgeKind::Gluing) {
            bool left = c.occ[0].side == EdgeSide::Left || c.occ[1].side == EdgeSide::Left;
            bool right = c.occ[0].side == EdgeSide::Right || c.occ[1].side == EdgeSide::Right;
            CHECK(left);
            CHECK(right);
        }
    }
}
