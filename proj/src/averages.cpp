#include "schreier/averages.hpp"

#include <cctype>
#include <optional>

namespace schreier {

BlockPtr BlockSpec::repeated(Ordinal x) {
    auto b = std::make_shared<BlockSpec>();
    b->kind = Kind::Repeated;
    b->xi = std::move(x);
    return b;
}

BlockPtr BlockSpec::composed(BlockPtr outer, BlockPtr inner) {
    auto b = std::make_shared<BlockSpec>();
    b->kind = Kind::Composed;
    b->outer = std::move(outer);
    b->inner = std::move(inner);
    return b;
}

FamilyPtr BlockSpec::family() const {
    if (kind == Kind::Repeated) return FamilyExpr::S(xi);
    return FamilyExpr::compose(outer->family(), inner->family());
}

std::string format_block(const BlockPtr& b) {
    if (b->kind == BlockSpec::Kind::Repeated) return "RA(" + format_ordinal(b->xi) + ")";
    return format_block(b->outer) + "*" + format_block(b->inner);
}

BlockPtr parse_block(const std::string& text) {
    std::vector<BlockPtr> atoms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip_ws();
        if (text.compare(i, 3, "RA(") != 0)
            throw ParseError("block parse error: expected RA( at position " + std::to_string(i));
        i += 3;
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw ParseError("block parse error: expected ')'");
        atoms.push_back(BlockSpec::repeated(parse_ordinal(text.substr(i, close - i))));
        i = close + 1;
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '*') throw ParseError("block parse error: expected '*'");
        ++i;
    }
    BlockPtr b = atoms.front();
    for (std::size_t k = 1; k < atoms.size(); ++k) b = BlockSpec::composed(b, atoms[k]);
    return b;
}

namespace {

struct FirstMeasure {
    ProbMeasure measure;
    std::size_t consumed; // leading elements of the prefix used
};

std::optional<FirstMeasure> try_block_first(FamilyEval& ev, const BlockSpec& b,
                                            const FiniteSet& rest);

std::optional<FirstMeasure> try_ra_first(FamilyEval& ev, const Ordinal& xi,
                                         const FiniteSet& rest) {
    if (rest.empty()) return std::nullopt;
    if (xi.is_zero()) return FirstMeasure{ProbMeasure::point(rest.min()), 1};
    if (xi.is_limit()) {
        Ordinal level = ord_add(fundamental(xi, rest.min()), Ordinal::from_nat(1));
        return try_ra_first(ev, level, rest);
    }
    Ordinal prev = predecessor(xi);
    std::uint64_t count = rest.min();
    ProbMeasure out;
    Rat share(1, Int(count));
    FiniteSet tail = rest;
    std::size_t consumed = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto sub = try_ra_first(ev, prev, tail);
        if (!sub) return std::nullopt;
        for (const auto& [k, w] : sub->measure.weights()) out.add(k, share * w);
        tail = tail.drop(sub->consumed);
        consumed += sub->consumed;
    }
    return FirstMeasure{std::move(out), consumed};
}

std::optional<FirstMeasure> try_composed_first(FamilyEval& ev, const BlockSpec& b,
                                               const FiniteSet& rest) {
    std::vector<ProbMeasure> inner_measures;
    std::vector<std::size_t> inner_consumed;
    std::vector<std::uint32_t> minima;
    FiniteSet tail = rest;
    while (true) {
        // does the minima sequence already carry a complete outer block?
        if (!minima.empty()) {
            FiniteSet l(minima);
            if (auto q = try_block_first(ev, *b.outer, l)) {
                std::size_t p = q->measure.support().size();
                if (p <= inner_measures.size()) {
                    ProbMeasure out;
                    std::size_t consumed = 0;
                    for (std::size_t i = 0; i < p; ++i) {
                        Rat qi = q->measure.at(minima[i]);
                        for (const auto& [k, w] : inner_measures[i].weights())
                            out.add(k, qi * w);
                        consumed += inner_consumed[i];
                    }
                    return FirstMeasure{std::move(out), consumed};
                }
            }
        }
        auto sub = try_block_first(ev, *b.inner, tail);
        if (!sub) return std::nullopt;
        minima.push_back(sub->measure.support().min());
        inner_measures.push_back(sub->measure);
        inner_consumed.push_back(sub->consumed);
        tail = tail.drop(sub->consumed);
    }
}

std::optional<FirstMeasure> try_block_first(FamilyEval& ev, const BlockSpec& b,
                                            const FiniteSet& rest) {
    if (b.kind == BlockSpec::Kind::Repeated) return try_ra_first(ev, b.xi, rest);
    return try_composed_first(ev, b, rest);
}

[[noreturn]] void exhausted(const FiniteSet& m) {
    throw PrefixExhausted("prefix " + m.to_string() + " is too short to complete the block");
}

} // namespace

ProbMeasure repeated_average(FamilyEval& ev, const Ordinal& xi, const FiniteSet& m, unsigned n) {
    if (n == 0) throw DomainError("measure index starts at 1");
    FiniteSet tail = m;
    for (unsigned i = 1;; ++i) {
        auto fm = try_ra_first(ev, xi, tail);
        if (!fm) exhausted(m);
        if (i == n) return fm->measure;
        tail = tail.drop(fm->consumed);
    }
}

ProbMeasure block_measure(FamilyEval& ev, const BlockPtr& b, const FiniteSet& m, unsigned n) {
    if (n == 0) throw DomainError("measure index starts at 1");
    FiniteSet tail = m;
    for (unsigned i = 1;; ++i) {
        auto fm = try_block_first(ev, *b, tail);
        if (!fm) exhausted(m);
        if (i == n) return fm->measure;
        tail = tail.drop(fm->consumed);
    }
}

std::vector<FiniteSet> block_supports(FamilyEval& ev, const BlockPtr& b, const FiniteSet& m,
                                      unsigned count) {
    std::vector<FiniteSet> out;
    FiniteSet tail = m;
    for (unsigned i = 0; i < count; ++i) {
        auto fm = try_block_first(ev, *b, tail);
        if (!fm) exhausted(m);
        out.push_back(fm->measure.support());
        tail = tail.drop(fm->consumed);
    }
    return out;
}

Rat sufficiency_sup(FamilyEval& ev, const BlockPtr& b, const FamilyPtr& g, const FiniteSet& m,
                    unsigned breadth) {
    if (m.size() > 24) throw CapExceeded("prefix too long for subset enumeration");
    Rat best(0);
    bool any = false;
    std::uint64_t enumerated = 0;

    auto evaluate = [&](const std::vector<std::uint32_t>& v) {
        auto fm = try_block_first(ev, *b, FiniteSet(v));
        if (!fm) return;
        any = true;
        const ProbMeasure& p = fm->measure;
        FiniteSet supp = p.support();
        // max-mass member of g inside the support, DFS with hereditary pruning
        std::vector<std::uint32_t> cur;
        auto dfs = [&](auto&& self, std::size_t from, const Rat& mass) -> void {
            for (std::size_t j = from; j < supp.size(); ++j) {
                cur.push_back(supp[j]);
                FiniteSet cand(cur);
                if (ev.contains(g, cand)) {
                    Rat nm = mass + p.at(supp[j]);
                    if (nm > best) best = nm;
                    self(self, j + 1, nm);
                }
                cur.pop_back();
            }
        };
        dfs(dfs, 0, Rat(0));
    };

    // include-first backtracking: the full prefix is visited first, then
    // order-subsets with elements dropped from the tail inward
    std::vector<std::uint32_t> cur;
    auto walk = [&](auto&& self, std::size_t pos) -> void {
        if (enumerated >= breadth) return;
        if (pos == m.size()) {
            if (!cur.empty()) {
                ++enumerated;
                evaluate(cur);
            }
            return;
        }
        cur.push_back(m[pos]);
        self(self, pos + 1);
        cur.pop_back();
        self(self, pos + 1);
    };
    walk(walk, 0);
    if (!any) exhausted(m);
    return best;
}

} // namespace schreier
