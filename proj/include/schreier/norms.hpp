#pragma once

#include <optional>

#include "schreier/enclosure.hpp"
#include "schreier/family.hpp"
#include "schreier/sparse_vector.hpp"

namespace schreier {

/// Exponent for the successive-block aggregate: infinity or a rational p > 1.
class PExponent {
public:
    static PExponent infinity() { return PExponent(); }
    static PExponent finite(Rat p) {
        if (p <= 1) throw DomainError("finite exponent must satisfy p > 1");
        PExponent e;
        e.p_ = std::move(p);
        return e;
    }
    static PExponent parse(const std::string& text) {
        if (text == "inf" || text == "infinity" || text == "oo") return infinity();
        return finite(parse_rational(text));
    }

    bool is_infinity() const { return !p_.has_value(); }
    const Rat& value() const { return *p_; }
    bool is_integer() const { return p_ && den(*p_) == 1; }
    unsigned as_integer() const { return static_cast<unsigned>(num(*p_).convert_to<std::uint64_t>()); }
    std::string to_string() const { return p_ ? rat_to_string(*p_) : "inf"; }

private:
    std::optional<Rat> p_;
};

/// Result of a norm evaluation. `exact` is set whenever the value is a
/// rational; otherwise [lower, upper] brackets it. For finite p the exact
/// p-th power is always available. The witness re-evaluates to the value:
/// a single set for sup-type norms, a successive partition otherwise.
struct NormValue {
    std::optional<Rat> exact;
    Rat lower{0}, upper{0};
    std::optional<Rat> exact_power;
    std::vector<FiniteSet> witness;

    static NormValue from_exact(Rat v) {
        NormValue n;
        n.lower = n.upper = v;
        n.exact = std::move(v);
        return n;
    }
};

struct NormContext {
    FamilyPtr family;
    PExponent p = PExponent::infinity();
};

/// sup over E in f of the l1 mass of x on E.
NormValue schreier_norm(FamilyEval& ev, const FamilyPtr& f, const SparseVector& x);

/// sup over successive blocks E_1 < E_2 < ... in f of (sum ||E_i x||_1^p)^(1/p);
/// p = infinity delegates to schreier_norm. root_bits controls the enclosure
/// width of the p-th root (the p-th power itself is exact for integer p).
NormValue baernstein_norm(FamilyEval& ev, const FamilyPtr& f, const PExponent& p,
                          const SparseVector& x, unsigned root_bits = 64);

inline NormValue norm_in_context(FamilyEval& ev, const NormContext& ctx, const SparseVector& x,
                                 unsigned root_bits = 64) {
    return baernstein_norm(ev, ctx.family, ctx.p, x, root_bits);
}

/// One summand of a dual-ball certificate: functional = convex combination of
/// pieces with given weights, each piece sup-norm <= 1 supported on `support`.
struct DualPiece {
    Rat weight;
    FiniteSet support;
};
struct DualPart {
    SparseVector functional;
    std::vector<DualPiece> pieces;
};

/// True iff every functional is a convex combination of unit-sup pieces on
/// its stated supports and every cross-selection of one support per part
/// unions into a member of f; a true verdict certifies that the sum of the
/// functionals lies in the dual unit ball of the f-norm.
bool dual_certificate_check(FamilyEval& ev, const FamilyPtr& f,
                            const std::vector<DualPart>& parts);

/// ||x||_beta for each requested beta.
std::vector<std::pair<Ordinal, NormValue>> norm_profile(FamilyEval& ev, const SparseVector& x,
                                                        const std::vector<Ordinal>& betas);

enum class SumMode { One, CZero, P };

/// Evaluates each part in its own context and combines by l1 sum, max, or
/// an l_p aggregate.
NormValue direct_sum_norm(FamilyEval& ev, SumMode mode, const PExponent& p,
                          const std::vector<std::pair<NormContext, SparseVector>>& parts,
                          unsigned root_bits = 64);

} // namespace schreier
