#include <doctest.h>

#include <random>

#include "schreier/averages.hpp"

using namespace schreier;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

FiniteSet random_prefix(std::mt19937_64& rng, std::size_t len, std::uint32_t start_max = 5,
                        std::uint32_t step_max = 3) {
    std::vector<std::uint32_t> v;
    std::uint32_t x = 1 + rng() % start_max;
    while (v.size() < len) {
        v.push_back(x);
        x += 1 + rng() % step_max;
    }
    return FiniteSet(v);
}

} // namespace

TEST_CASE("block parse/format") {
    CHECK(format_block(parse_block("RA(1)")) == "RA(1)");
    CHECK(format_block(parse_block("RA(1)*RA(0)")) == "RA(1)*RA(0)");
    CHECK(format_block(parse_block(" RA(w) * RA(1) ")) == "RA(w)*RA(1)");
    CHECK(format_family(parse_block("RA(1)*RA(0)")->family()) == "S(1)[S(0)]");
    CHECK_THROWS_AS(parse_block("R(1)"), ParseError);
}

TEST_CASE("repeated_average examples") {
    FamilyEval ev;
    // level 0: point masses on successive elements
    CHECK(repeated_average(ev, O("0"), FiniteSet{5, 7, 9, 11}, 2) == ProbMeasure::point(7));

    // level 1: uniform over the first min-many elements
    ProbMeasure half = repeated_average(ev, O("1"), FiniteSet{2, 3, 4, 5}, 1);
    CHECK(half.at(2) == Rat(1, 2));
    CHECK(half.at(3) == Rat(1, 2));
    CHECK(half.support() == FiniteSet{2, 3});

    CHECK(repeated_average(ev, O("1"), FiniteSet{1, 2, 3}, 1) == ProbMeasure::point(1));

    CHECK_THROWS_AS(repeated_average(ev, O("2"), FiniteSet{3, 4}, 1), PrefixExhausted);
}

TEST_CASE("level-2 average expands the recursion") {
    FamilyEval ev;
    // m = (2,3,4,5,6,7,...): S^2_{m,1} averages two S^1 blocks: uniform 1/2 on
    // {2,3} then uniform on the next block starting at 4
    ProbMeasure p = repeated_average(ev, O("2"), FiniteSet::range(2, 12), 1);
    CHECK(p.at(2) == Rat(1, 4));
    CHECK(p.at(3) == Rat(1, 4));
    for (std::uint32_t k = 4; k <= 7; ++k) CHECK(p.at(k) == Rat(1, 8));
    CHECK(p.total() == 1);
    CHECK(p.support() == FiniteSet::range(2, 7));
}

TEST_CASE("limit levels defer to the fundamental sequence") {
    FamilyEval ev;
    // the level-w average at min 1 collapses to level 2, which is the point
    // mass on {1}
    CHECK(repeated_average(ev, O("w"), FiniteSet::range(1, 8), 1) == ProbMeasure::point(1));
    // at min 2 the level-w average equals the level-3 one; the level-3 block
    // at min 2 is {2..7} followed by the level-2 block at 8, which runs
    // through eight doubling level-1 blocks up to 2047
    FiniteSet m = FiniteSet::range(2, 2100);
    ProbMeasure w = repeated_average(ev, O("w"), m, 1);
    CHECK(w == repeated_average(ev, O("3"), m, 1));
    CHECK(w.support() == FiniteSet::range(2, 2047));
    CHECK(w.total() == 1);
}

TEST_CASE("block_measure composition") {
    FamilyEval ev;
    // outer point masses reproduce the inner block exactly
    auto ra0_ra1 = parse_block("RA(0)*RA(1)");
    FiniteSet m = FiniteSet::range(2, 30);
    for (unsigned n = 1; n <= 3; ++n)
        CHECK(block_measure(ev, ra0_ra1, m, n) == repeated_average(ev, O("1"), m, n));

    // RA(1)*RA(0) at index 1 matches the level-1 average
    auto ra1_ra0 = parse_block("RA(1)*RA(0)");
    ProbMeasure o = block_measure(ev, ra1_ra0, FiniteSet{2, 3, 4, 5}, 1);
    CHECK(o.at(2) == Rat(1, 2));
    CHECK(o.at(3) == Rat(1, 2));

    // singleton support forces a point mass
    CHECK(block_measure(ev, ra1_ra0, FiniteSet{1, 2, 3}, 1) == ProbMeasure::point(1));
}

TEST_CASE("block_supports equals family decomposition") {
    FamilyEval ev;
    std::mt19937_64 rng(17u);
    for (const char* spec : {"RA(0)", "RA(1)", "RA(2)", "RA(1)*RA(1)", "RA(1)*RA(0)"}) {
        BlockPtr b = parse_block(spec);
        FamilyPtr fam = b->family();
        for (int t = 0; t < 20; ++t) {
            FiniteSet m = random_prefix(rng, 20);
            auto blocks = ev.decompose(fam, m);
            if (blocks.empty()) continue;
            unsigned count = static_cast<unsigned>(std::min<std::size_t>(blocks.size(), 3));
            auto supports = block_supports(ev, b, m, count);
            for (unsigned i = 0; i < count; ++i) REQUIRE(supports[i] == blocks[i]);
        }
    }
    auto s = block_supports(ev, parse_block("RA(1)"), FiniteSet::range(1, 10), 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == FiniteSet{1});
    CHECK(s[1] == FiniteSet{2, 3});
    CHECK(s[2] == FiniteSet{4, 5, 6, 7});
    auto pts = block_supports(ev, parse_block("RA(0)"), FiniteSet{4, 6, 8}, 3);
    CHECK(pts[1] == FiniteSet{6});
}

TEST_CASE("measures are probability measures with positive weights") {
    FamilyEval ev;
    std::mt19937_64 rng(23u);
    for (const char* spec : {"RA(1)", "RA(2)", "RA(1)*RA(1)"}) {
        BlockPtr b = parse_block(spec);
        for (int t = 0; t < 25; ++t) {
            FiniteSet m = random_prefix(rng, 22);
            ProbMeasure p;
            try {
                p = block_measure(ev, b, m, 1);
            } catch (const PrefixExhausted&) {
                continue;
            }
            REQUIRE(p.total() == 1);
            for (const auto& [k, w] : p.weights()) REQUIRE(w > 0);
        }
    }
}

TEST_CASE("tail coherence") {
    FamilyEval ev;
    std::mt19937_64 rng(29u);
    for (const char* spec : {"RA(0)", "RA(1)", "RA(2)", "RA(1)*RA(1)"}) {
        BlockPtr b = parse_block(spec);
        for (int t = 0; t < 15; ++t) {
            FiniteSet m = random_prefix(rng, 24);
            for (unsigned r = 2; r <= 5; ++r) {
                ProbMeasure direct;
                try {
                    direct = block_measure(ev, b, m, r);
                } catch (const PrefixExhausted&) {
                    break;
                }
                // drop the first r-1 supports and re-evaluate at index 1
                FiniteSet rest = m;
                for (unsigned i = 1; i < r; ++i)
                    rest = rest.drop(block_measure(ev, b, rest, 1).support().size());
                REQUIRE(block_measure(ev, b, rest, 1) == direct);
            }
        }
    }
}

TEST_CASE("permanence under rebasing on complete supports") {
    FamilyEval ev;
    std::mt19937_64 rng(31u);
    for (const char* spec : {"RA(1)", "RA(2)", "RA(1)*RA(1)"}) {
        BlockPtr b = parse_block(spec);
        for (int t = 0; t < 10; ++t) {
            FiniteSet m = random_prefix(rng, 24);
            std::vector<FiniteSet> supports;
            try {
                supports = block_supports(ev, b, m, 4);
            } catch (const PrefixExhausted&) {
                continue;
            }
            // rebase on supports r_1 < r_2 with gaps: {1,3} and {2,4}
            FiniteSet n13 = set_union(supports[0], supports[2]);
            REQUIRE(block_measure(ev, b, n13, 1) == block_measure(ev, b, m, 1));
            REQUIRE(block_measure(ev, b, n13, 2) == block_measure(ev, b, m, 3));
            FiniteSet n24 = set_union(supports[1], supports[3]);
            REQUIRE(block_measure(ev, b, n24, 1) == block_measure(ev, b, m, 2));
            REQUIRE(block_measure(ev, b, n24, 2) == block_measure(ev, b, m, 4));
        }
    }
}

TEST_CASE("sufficiency_sup") {
    FamilyEval ev;
    // uniform level-1 block starting at k gives singleton mass 1/k
    for (std::uint32_t k : {4u, 7u, 10u}) {
        FiniteSet m = FiniteSet::range(k, k + 15);
        CHECK(sufficiency_sup(ev, parse_block("RA(1)"), FamilyExpr::A(1), m, 2000) ==
              Rat(1, Int(k)));
    }
    // point masses defeat level-0 sufficiency against singletons
    CHECK(sufficiency_sup(ev, parse_block("RA(0)"), FamilyExpr::A(1),
                          FiniteSet::range(3, 10), 200) == 1);
    // three atoms of weight 1/10 under the uniform block at min 10
    CHECK(sufficiency_sup(ev, parse_block("RA(1)"), FamilyExpr::A(3),
                          FiniteSet::range(10, 30), 50) == Rat(3, 10));
}

TEST_CASE("sufficiency decay for RA(1) against A(k)") {
    FamilyEval ev;
    auto ra1 = parse_block("RA(1)");
    for (std::uint32_t mn : {5u, 8u, 12u}) {
        FiniteSet m = FiniteSet::range(mn, mn + 14);
        for (unsigned k : {1u, 2u}) {
            Rat v = sufficiency_sup(ev, ra1, FamilyExpr::A(k), m, 500);
            CHECK(v == Rat(k, Int(mn))); // exact k/min decay
        }
    }
}
