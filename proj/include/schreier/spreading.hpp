#pragma once

#include "schreier/averages.hpp"
#include "schreier/norms.hpp"

namespace schreier {

/// A finite sequence of vectors together with the ambient norm they live in.
struct SequenceData {
    std::vector<SparseVector> vectors; // x_1, x_2, ... (1-indexed by coordinate)
    NormContext context;
};

struct SpreadingReport {
    enum class Mode { Ell1Lower, C0Lower, C0Upper };
    Mode mode;
    Rat constant;
    FiniteSet witness_set;              // the F realizing the constant
    std::vector<Rat> coefficients;      // a_n (resp. signs) aligned with witness_set
};

/// Exact min over nonempty F in f with F within {1..n_max} of
/// min { ||sum_{n in F} a_n x_n|| : sum |a_n| = 1 }, by exact-rational simplex
/// over each sign-pattern facet of the l1 sphere. Requires a sup-type
/// (p = infinity) ambient context: that norm is polyhedral.
/// lp_cap bounds #facets x #generator rows.
SpreadingReport ell1_constant(FamilyEval& ev, const FamilyPtr& f, const SequenceData& s,
                              unsigned n_max, std::uint64_t lp_cap = 1u << 20);

/// Exact lower and upper c0-spreading constants over F in f and signs in
/// {-1,+1}^F (real scalar convention); |F| <= sign_cap guards the 2^|F|
/// enumeration. Sup-type ambient required.
std::pair<SpreadingReport, SpreadingReport> c0_constants(FamilyEval& ev, const FamilyPtr& f,
                                                         const SequenceData& s, unsigned n_max,
                                                         unsigned sign_cap);

/// Convex block sequence y_n = sum_i S^xi_{m,n}(i) x_i built from the
/// repeated-averages hierarchy; as many complete blocks as m supports.
SequenceData average_block(FamilyEval& ev, const Ordinal& xi, const FiniteSet& m,
                           const SequenceData& s);

/// Max over order-subsets N of m of ||sum_{n in N|_f} x_n||: the finite-prefix
/// boundedness diagnostic for c0-spreading behavior. Sup-type ambient required.
Rat c0_prefix_criterion(FamilyEval& ev, const FamilyPtr& f, const SequenceData& s,
                        const FiniteSet& m);

} // namespace schreier
