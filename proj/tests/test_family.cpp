#include <doctest.h>

#include <random>
#include <set>

#include "schreier/family.hpp"

using namespace schreier;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

// --- independent membership oracle ------------------------------------------
// Follows the recursive definitions literally: the successor case searches all
// partitions into at most min E successive nonempty pieces (no greedy
// shortcut), the limit case uses the min-indexed convention.

bool oracle_schreier(const Ordinal& xi, const FiniteSet& e);

bool oracle_partition_exists(const Ordinal& inner, const FiniteSet& e, std::size_t from,
                             std::size_t budget) {
    if (from == e.size()) return true;
    if (budget == 0) return false;
    for (std::size_t len = 1; from + len <= e.size(); ++len) {
        std::vector<std::uint32_t> piece(e.elements().begin() + from,
                                         e.elements().begin() + from + len);
        if (oracle_schreier(inner, FiniteSet(piece)) &&
            oracle_partition_exists(inner, e, from + len, budget - 1))
            return true;
    }
    return false;
}

bool oracle_schreier(const Ordinal& xi, const FiniteSet& e) {
    if (e.empty()) return true;
    if (xi.is_zero()) return e.size() <= 1;
    if (xi.is_successor())
        return oracle_partition_exists(predecessor(xi), e, 0, e.min());
    return oracle_schreier(ord_add(fundamental(xi, e.min()), Ordinal::from_nat(1)), e);
}

// full partition search for F[G] membership
bool oracle_compose(FamilyEval& ev, const FamilyPtr& outer, const FamilyPtr& inner,
                    const FiniteSet& e, std::size_t from, std::vector<std::uint32_t>& mins) {
    if (from == e.size()) return ev.contains(outer, FiniteSet(mins));
    for (std::size_t len = 1; from + len <= e.size(); ++len) {
        std::vector<std::uint32_t> piece(e.elements().begin() + from,
                                         e.elements().begin() + from + len);
        if (!ev.contains(inner, FiniteSet(piece))) continue;
        mins.push_back(piece.front());
        if (oracle_compose(ev, outer, inner, e, from + len, mins)) {
            mins.pop_back();
            return true;
        }
        mins.pop_back();
    }
    return false;
}

std::vector<FiniteSet> all_subsets(unsigned n) {
    std::vector<FiniteSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> v;
        for (unsigned k = 0; k < n; ++k)
            if (mask & (1u << k)) v.push_back(k + 1);
        out.emplace_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("family parse/format") {
    for (const char* s : {"A(2)", "S(1)", "S(w)", "A(2)[S(1)]", "S(1)[A(2)][S(w+1)]"}) {
        FamilyPtr f = parse_family(s);
        CHECK(format_family(f) == s);
    }
    CHECK_THROWS_AS(parse_family("B(2)"), ParseError);
    CHECK_THROWS_AS(parse_family("A(w)"), ParseError);
    CHECK_THROWS_AS(parse_family("A(2)["), ParseError);
}

TEST_CASE("membership examples") {
    FamilyEval ev;
    CHECK(ev.contains(FamilyExpr::S(O("1")), FiniteSet{2, 3}));
    CHECK_FALSE(ev.contains(FamilyExpr::S(O("1")), FiniteSet{1, 2}));
    auto a2s1 = FamilyExpr::compose(FamilyExpr::A(2), FamilyExpr::S(O("1")));
    CHECK(ev.contains(a2s1, FiniteSet{2, 3, 4, 5, 6}));
    // empty set belongs to every family here
    CHECK(ev.contains(FamilyExpr::A(0), FiniteSet{}));
    CHECK_FALSE(ev.contains(FamilyExpr::A(0), FiniteSet{3}));
}

TEST_CASE("membership matches the definition oracle") {
    FamilyEval ev;
    for (const char* xi : {"1", "2", "3", "w", "w+1", "w^2"}) {
        FamilyPtr f = FamilyExpr::S(O(xi));
        for (const auto& e : all_subsets(9))
            REQUIRE(ev.contains(f, e) == oracle_schreier(O(xi), e));
    }
    for (const char* expr : {"A(2)[S(1)]", "S(1)[A(2)]", "S(1)[S(1)]", "A(3)[A(2)]"}) {
        FamilyPtr f = parse_family(expr);
        for (const auto& e : all_subsets(9)) {
            std::vector<std::uint32_t> mins;
            bool expect = e.empty() || oracle_compose(ev, f->outer, f->inner, e, 0, mins);
            REQUIRE(ev.contains(f, e) == expect);
        }
    }
}

TEST_CASE("is_max examples and equivalence with superset search") {
    FamilyEval ev;
    CHECK(ev.is_max(FamilyExpr::S(O("1")), FiniteSet{2, 3}));
    CHECK_FALSE(ev.is_max(FamilyExpr::S(O("1")), FiniteSet{2}));
    CHECK(ev.is_max(FamilyExpr::A(2), FiniteSet{5, 9}));
    CHECK_THROWS_AS(ev.is_max(FamilyExpr::S(O("1")), FiniteSet{1, 2}), DomainError);

    // right-extension test agrees with full superset search within a truncation
    const unsigned n = 8;
    for (const char* expr : {"S(1)", "S(2)", "A(3)", "A(2)[S(1)]", "S(w)"}) {
        FamilyPtr f = parse_family(expr);
        auto members = ev.enumerate(f, n);
        for (const auto& e : members) {
            if (!e.empty() && e.max() + 2 > n) continue; // keep extensions inside the cap
            bool has_super = false;
            for (const auto& g : members)
                if (g.size() > e.size() && e.is_subset_of(g)) has_super = true;
            REQUIRE(ev.is_max(f, e) == !has_super);
        }
    }
}

TEST_CASE("initial_segment examples") {
    FamilyEval ev;
    auto s1 = FamilyExpr::S(O("1"));
    CHECK(ev.initial_segment(s1, FiniteSet{1, 3, 4, 5}) == FiniteSet{1});
    CHECK(ev.initial_segment(s1, FiniteSet{2, 3, 4, 5}) == FiniteSet{2, 3});
    CHECK(ev.initial_segment(FamilyExpr::A(2), FiniteSet{4, 7, 9}) == FiniteSet{4, 7});
    CHECK_THROWS_AS(ev.initial_segment(s1, FiniteSet{3, 4}), PrefixExhausted);
}

TEST_CASE("decompose examples") {
    FamilyEval ev;
    auto blocks = ev.decompose(FamilyExpr::S(O("1")), FiniteSet::range(1, 10));
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == FiniteSet{1});
    CHECK(blocks[1] == FiniteSet{2, 3});
    CHECK(blocks[2] == FiniteSet{4, 5, 6, 7});

    auto a3 = ev.decompose(FamilyExpr::A(3), FiniteSet::range(1, 7));
    REQUIRE(a3.size() == 2);
    CHECK(a3[0] == FiniteSet{1, 2, 3});
    CHECK(a3[1] == FiniteSet{4, 5, 6});

    auto s0 = ev.decompose(FamilyExpr::S(O("0")), FiniteSet{5, 6, 7});
    REQUIRE(s0.size() == 3);
    CHECK(s0[0] == FiniteSet{5});
    CHECK(s0[2] == FiniteSet{7});
}

TEST_CASE("decompose blocks are successive maximal members covering a prefix") {
    FamilyEval ev;
    std::mt19937_64 rng(11u);
    for (const char* expr : {"S(1)", "S(2)", "A(2)", "A(2)[S(1)]"}) {
        FamilyPtr f = parse_family(expr);
        for (int t = 0; t < 50; ++t) {
            std::vector<std::uint32_t> v;
            std::uint32_t x = 1 + rng() % 4;
            while (v.size() < 14) {
                v.push_back(x);
                x += 1 + rng() % 3;
            }
            FiniteSet m(v);
            auto blocks = ev.decompose(f, m);
            std::size_t used = 0;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                REQUIRE(ev.is_max(f, blocks[i]));
                if (i) REQUIRE(successive(blocks[i - 1], blocks[i]));
                used += blocks[i].size();
            }
            FiniteSet covered;
            for (const auto& b : blocks) covered = set_union(covered, b);
            REQUIRE(covered == m.prefix(used));
        }
    }
}

TEST_CASE("enumerate examples") {
    FamilyEval ev;
    auto s1 = ev.enumerate(FamilyExpr::S(O("1")), 3);
    std::vector<FiniteSet> expect = {FiniteSet{}, FiniteSet{1}, FiniteSet{2}, FiniteSet{3},
                                     FiniteSet{2, 3}};
    CHECK(s1 == expect);
    auto a1 = ev.enumerate(FamilyExpr::A(1), 2);
    std::vector<FiniteSet> expect_a1 = {FiniteSet{}, FiniteSet{1}, FiniteSet{2}};
    CHECK(a1 == expect_a1);
    // computed with the definition oracle: S(2) on {1,2,3} coincides with S(1)
    auto s2 = ev.enumerate(FamilyExpr::S(O("2")), 3);
    CHECK(s2 == expect);
    CHECK_THROWS_AS(ev.enumerate(FamilyExpr::A(1), 99), CapExceeded);
}

TEST_CASE("membership/enumeration coherence") {
    FamilyEval ev;
    for (const char* expr : {"S(1)", "S(2)", "A(2)", "A(2)[S(1)]", "S(w)"}) {
        FamilyPtr f = parse_family(expr);
        for (unsigned n : {4u, 8u}) {
            auto members = ev.enumerate(f, n);
            std::set<FiniteSet> lookup(members.begin(), members.end());
            for (const auto& e : all_subsets(n))
                REQUIRE(ev.contains(f, e) == (lookup.count(e) > 0));
        }
    }
}

TEST_CASE("is_spread") {
    CHECK(is_spread(FiniteSet{1, 3}, FiniteSet{2, 5}));
    CHECK_FALSE(is_spread(FiniteSet{2, 5}, FiniteSet{1, 3}));
    CHECK(is_spread(FiniteSet{}, FiniteSet{}));
    CHECK_FALSE(is_spread(FiniteSet{1}, FiniteSet{}));
}

TEST_CASE("spreading holds on truncations") {
    FamilyEval ev;
    std::mt19937_64 rng(5u);
    for (const char* expr : {"S(1)", "S(2)", "S(w)", "A(2)[S(1)]"}) {
        FamilyPtr f = parse_family(expr);
        auto members = ev.enumerate(f, 9);
        for (const auto& e : members) {
            if (e.empty()) continue;
            for (int t = 0; t < 8; ++t) {
                std::vector<std::uint32_t> g = e.elements();
                for (std::size_t i = g.size(); i-- > 0;) {
                    std::uint32_t hi = (i + 1 < g.size()) ? g[i + 1] - 1 : 9;
                    if (hi > g[i]) g[i] += rng() % (hi - g[i] + 1);
                }
                REQUIRE(ev.contains(f, FiniteSet(g)));
            }
        }
    }
}

TEST_CASE("S(1) is contained in S(xi) on truncations") {
    FamilyEval ev;
    auto s1 = ev.enumerate(FamilyExpr::S(O("1")), 10);
    for (const char* xi : {"1", "2", "3", "w", "w+1", "w^2", "w^{w}"}) {
        FamilyPtr f = FamilyExpr::S(O(xi));
        for (const auto& e : s1) REQUIRE(ev.contains(f, e));
    }
}

TEST_CASE("cb_index") {
    CHECK(cb_index(parse_family("A(3)")) == O("4"));
    CHECK(cb_index(parse_family("S(w)")) == O("w^{w}+1"));
    CHECK(cb_index(parse_family("A(2)[S(1)]")) == O("w*2+1"));
    CHECK(cb_index(parse_family("S(1)[A(2)]")) == O("w+1")); // 2*w = w
    CHECK(cb_index(parse_family("S(1)[S(1)]")) == O("w^2+1"));
    CHECK(cb_index(parse_family("A(4)[A(2)]")) == O("9"));
}

TEST_CASE("regularity reports") {
    FamilyEval ev;
    CHECK(ev.check_regular_truncation(parse_family("S(2)"), 8).ok);
    CHECK(ev.check_regular_truncation(parse_family("A(4)"), 6).ok);
    CHECK(ev.check_regular_truncation(parse_family("S(1)[A(2)]"), 8).ok);
}

TEST_CASE("niceness reports") {
    FamilyEval ev;
    CHECK(ev.is_nice(parse_family("S(3)"), 8).ok);
    CHECK_FALSE(ev.is_nice(parse_family("A(0)"), 4).ok);
    CHECK(ev.is_nice(parse_family("A(2)"), 6).ok);
    CHECK(ev.is_nice(parse_family("A(2)[S(1)]"), 8).ok);
}
