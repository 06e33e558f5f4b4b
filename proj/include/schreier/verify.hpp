#pragma once

#include <optional>

#include "schreier/averages.hpp"
#include "schreier/norms.hpp"

namespace schreier {

/// Outcome of one lemma check. Checks whose scope is a finite, exhaustively
/// tested statement may report pass/fail; checks sampling an intrinsically
/// infinite or existential claim report inconclusive-cap (or fail on a
/// re-checkable counterexample), never pass.
struct CheckReport {
    std::string id;
    std::string params;
    enum class Verdict { Pass, Fail, InconclusiveCap };
    Verdict verdict = Verdict::Pass;
    std::string detail;
    std::optional<std::string> counterexample;
    std::uint64_t instances = 0;
    double runtime_ms = 0;
    std::uint64_t seed = 0;

    static const char* verdict_name(Verdict v) {
        switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::InconclusiveCap:
            return "inconclusive-cap";
        }
        return "?";
    }
};

/// Cantor-Bendixson index by derivative counting, for families whose
/// membership depends only on the element count (those built from A(n) and
/// composition). For such spread-invariant families a member is isolated in
/// the j-th derivative iff its right-extension chain of length j leaves the
/// family, so CB equals the least j with {1..j} outside it.
Ordinal cb_by_derivatives(FamilyEval& ev, const FamilyPtr& f, unsigned max_steps = 64);

/// Every family with index <= max_cb built from A(n) atoms and up to two
/// composition levels.
std::vector<FamilyPtr> bounded_size_corpus(unsigned max_cb);

/// Items of the regular-family fact collection (1..7): composition CB
/// formula, CB(A_n), CB(S_xi), rebasing regularity, embedding comparability
/// (truncation-level), almost-monotone least-n finder, S_1 inclusion.
std::vector<CheckReport> check_deep_facts(FamilyEval& ev, const std::vector<int>& items,
                                          unsigned cap);

/// Samples successive S_gamma blocks, index selections and S_delta index
/// sets, and tests the union against S_{gamma+delta}. Identity cases
/// (gamma or delta zero) are instance-exact; mixed cases sample an
/// existential claim and report inconclusive-cap with the pass fraction.
CheckReport check_union_lemma(FamilyEval& ev, const Ordinal& gamma, const Ordinal& delta,
                              const FiniteSet& m, unsigned trials, std::uint64_t seed);

/// Probability-block axioms (support of the first measure, tail coherence)
/// plus rebasing permanence, exactly, on the given prefixes.
CheckReport check_block_axioms(FamilyEval& ev, const BlockPtr& b,
                               const std::vector<FiniteSet>& prefixes);

/// Unconditionality, the lower p-estimate on successive blocks, and the
/// dual-certificate pairing bound, exactly, on random instances.
CheckReport check_norm_estimates(FamilyEval& ev, const Ordinal& xi, const PExponent& p,
                                 unsigned trials, std::uint64_t seed);

/// Measures whether S_{xi_n + 1} is contained in S_{xi_{n+1}} on a truncation
/// for the fixed fundamental-sequence convention.
CheckReport check_limit_sequence(FamilyEval& ev, const Ordinal& xi, unsigned cap);

/// Named suites: deep-facts, union-lemma, block-axioms, norm-estimates,
/// limit-seq, all.
std::vector<CheckReport> run_suite(FamilyEval& ev, const std::string& suite, unsigned cap,
                                   std::uint64_t seed);

} // namespace schreier
