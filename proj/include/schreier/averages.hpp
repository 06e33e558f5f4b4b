#pragma once

#include "schreier/family.hpp"
#include "schreier/rational.hpp"

namespace schreier {

/// Finitely supported probability measure with exact rational weights.
class ProbMeasure {
public:
    ProbMeasure() = default;

    static ProbMeasure point(std::uint32_t n) {
        ProbMeasure p;
        p.w_[n] = 1;
        return p;
    }

    void add(std::uint32_t n, const Rat& w) {
        if (w <= 0) throw DomainError("probability weights must be positive");
        auto [it, fresh] = w_.emplace(n, w);
        if (!fresh) it->second += w;
    }

    const std::map<std::uint32_t, Rat>& weights() const { return w_; }

    Rat at(std::uint32_t n) const {
        auto it = w_.find(n);
        return it == w_.end() ? Rat(0) : it->second;
    }

    /// mass of a set: sum of weights over its elements
    Rat mass(const FiniteSet& e) const {
        Rat m(0);
        for (std::uint32_t k : e) m += at(k);
        return m;
    }

    Rat total() const {
        Rat t(0);
        for (const auto& [k, w] : w_) t += w;
        return t;
    }

    FiniteSet support() const {
        std::vector<std::uint32_t> v;
        v.reserve(w_.size());
        for (const auto& [k, w] : w_) v.push_back(k);
        return FiniteSet(std::move(v));
    }

    friend bool operator==(const ProbMeasure& a, const ProbMeasure& b) { return a.w_ == b.w_; }
    friend bool operator!=(const ProbMeasure& a, const ProbMeasure& b) { return !(a == b); }

private:
    std::map<std::uint32_t, Rat> w_;
};

/// A probability block: the repeated-averages hierarchy over S(xi), or the
/// composition Q*P over Q's family applied to P's family.
struct BlockSpec;
using BlockPtr = std::shared_ptr<const BlockSpec>;

struct BlockSpec {
    enum class Kind { Repeated, Composed };

    Kind kind;
    Ordinal xi;             // Repeated
    BlockPtr outer, inner;  // Composed

    static BlockPtr repeated(Ordinal x);
    static BlockPtr composed(BlockPtr outer, BlockPtr inner);

    /// The nice family whose maximal blocks carry the measures.
    FamilyPtr family() const;
};

std::string format_block(const BlockPtr& b);
/// Grammar: RA(<ordinal>) atoms joined by '*', left-associative; "Q*P" has
/// outer Q and inner P, so its family is Qfam[Pfam].
BlockPtr parse_block(const std::string& text);

/// The n-th repeated average over S(xi) on the prefix m. The recursion:
/// level 0 gives point masses on successive elements; a successor level
/// averages min-many level-below measures uniformly; a limit level defers to
/// the fundamental-sequence level indexed by the current minimum; n > 1 drops
/// the supports of the first n-1 measures and re-evaluates at 1.
ProbMeasure repeated_average(FamilyEval& ev, const Ordinal& xi, const FiniteSet& m, unsigned n);

/// The n-th measure of the block on prefix m; compositions follow
/// O_{M,n} = sum over i in the n-th outer block of Q_{L,n}(l_i) P_{M,i} with
/// l_i the minima of the inner supports.
ProbMeasure block_measure(FamilyEval& ev, const BlockPtr& b, const FiniteSet& m, unsigned n);

/// Supports of the first `count` measures; coincides with decompose of the
/// block's family on m.
std::vector<FiniteSet> block_supports(FamilyEval& ev, const BlockPtr& b, const FiniteSet& m,
                                      unsigned count);

/// Exact max of P_{N,1}(E) over enumerated order-subsets N of m (at most
/// `breadth` candidates, include-first backtracking so the full prefix comes
/// first) and members E of g. A lower bound for the corresponding sup, used
/// as a falsifier/diagnostic.
Rat sufficiency_sup(FamilyEval& ev, const BlockPtr& b, const FamilyPtr& g, const FiniteSet& m,
                    unsigned breadth);

} // namespace schreier
