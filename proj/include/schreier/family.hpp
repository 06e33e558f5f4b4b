#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schreier/finite_set.hpp"
#include "schreier/ordinal.hpp"

namespace schreier {

/// Symbolic regular family: A(n) (all sets of size <= n), S(xi) (Schreier
/// family under the fixed fundamental-sequence convention), or F[G]
/// (unions of successive nonempty G-sets whose minima form an F-set).
struct FamilyExpr;
using FamilyPtr = std::shared_ptr<const FamilyExpr>;

struct FamilyExpr {
    enum class Kind { BoundedSize, Schreier, Compose };

    Kind kind;
    unsigned size_bound = 0; // BoundedSize
    Ordinal xi;              // Schreier
    FamilyPtr outer, inner;  // Compose

    static FamilyPtr A(unsigned n);
    static FamilyPtr S(Ordinal x);
    static FamilyPtr compose(FamilyPtr f, FamilyPtr g);
};

std::string format_family(const FamilyPtr& f);
/// Grammar: A(n), S(<ordinal>), postfix composition F[G]; e.g. "A(2)[S(1)]".
FamilyPtr parse_family(const std::string& text);

/// Symbolic Cantor-Bendixson index: A(n) -> n+1, S(x) -> w^x+1,
/// F[G] -> a*b+1 where CB(F)=b+1, CB(G)=a+1.
Ordinal cb_index(const FamilyPtr& f);

struct TruncationReport {
    bool ok = true;
    std::string detail;                  // human-readable summary
    std::optional<FiniteSet> witness;    // offending set on failure
};

/// Membership evaluator with a guarded memo table; concurrent calls are
/// linearizable and side-effect-free to callers.
class FamilyEval {
public:
    explicit FamilyEval(unsigned enumeration_cap = 24) : cap_(enumeration_cap) {}

    unsigned cap() const { return cap_; }
    void set_cap(unsigned c) { cap_ = c; }

    bool contains(const FamilyPtr& f, const FiniteSet& e);

    /// pre: e in f. For the nice families expressible here, maximality is
    /// equivalent to the right extension e+{max e+1} (or {1} for the empty
    /// set) falling outside f.
    bool is_max(const FamilyPtr& f, const FiniteSet& e);

    /// Shortest prefix of m that is a maximal member of f.
    FiniteSet initial_segment(const FamilyPtr& f, const FiniteSet& m);
    std::optional<FiniteSet> try_initial_segment(const FamilyPtr& f, const FiniteSet& m);

    /// Successive maximal members greedily extracted from m; incomplete
    /// trailing blocks are dropped.
    std::vector<FiniteSet> decompose(const FamilyPtr& f, const FiniteSet& m);

    /// All members within {1..n}, sorted by (size, elements); includes {}.
    std::vector<FiniteSet> enumerate(const FamilyPtr& f, unsigned n);

    TruncationReport check_regular_truncation(const FamilyPtr& f, unsigned n);
    TruncationReport is_nice(const FamilyPtr& f, unsigned n);

private:
    unsigned cap_;
    std::mutex mu_;
    // memo keyed on (canonical node id, set); Schreier levels get ids from
    // their ordinal, composite nodes from their formatted expression, so the
    // recursion over ordinal levels shares entries and reparsed expressions
    // hit the same rows
    std::map<Ordinal, std::size_t> schreier_ids_;
    std::unordered_map<std::string, std::size_t> expr_ids_;
    std::unordered_map<std::string, bool> memo_;

    bool contains_node(const FamilyExpr& f, const FiniteSet& e);
    bool schreier_contains(const Ordinal& xi, const FiniteSet& e);
    std::size_t schreier_id(const Ordinal& xi);

    // longest prefix of e (as a sequence) lying in the predicate family
    template <class Pred>
    std::size_t longest_prefix(const FiniteSet& e, Pred member);
    /// Greedy minimal successive-block count; valid for hereditary families.
    template <class Pred>
    std::vector<FiniteSet> greedy_blocks(const FiniteSet& e, Pred member);
};

/// Process-wide default evaluator.
FamilyEval& default_eval();

} // namespace schreier
