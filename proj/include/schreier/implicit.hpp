#pragma once

#include "schreier/norms.hpp"

namespace schreier {

/// Geometric weight schedule theta_n = scale * ratio^(n-1) with certified
/// total sum below 1; closed forms keep every tail exactly computable.
class ThetaSchedule {
public:
    static ThetaSchedule geometric(Rat scale, Rat ratio);
    /// "geometric:r" (theta_n = r^(n+1)) or "geometric:s:r" (theta_n = s*r^(n-1)).
    static ThetaSchedule parse(const std::string& text);
    /// theta_n = 2^(-n-1), total 1/2.
    static ThetaSchedule standard() { return geometric(Rat(1, 4), Rat(1, 2)); }

    Rat theta(unsigned n) const; // n >= 1
    Rat total() const { return scale_ / (1 - ratio_); }
    /// sum_{n > N} theta_n^2
    Rat sq_tail(unsigned N) const;
    std::string to_string() const;

private:
    Rat scale_, ratio_;
    ThetaSchedule(Rat s, Rat r) : scale_(std::move(s)), ratio_(std::move(r)) {}
};

struct IterationTrace {
    struct Step {
        Rat lower, upper; // enclosure of |x|_k
    };
    enum class Termination { FixedPoint, Tolerance, Cap };

    std::vector<Step> steps; // steps[k] = |x|_k, k = 0..K
    Termination termination = Termination::FixedPoint;
    unsigned iterations = 0;
    unsigned theta_head = 0; // schedule indices evaluated explicitly
    unsigned upper_sweeps = 0;
};

/// The iterated implicit norm: |x|_0 is the base-family norm; each step takes
/// the max of the previous value with the l2 aggregate over n of
/// theta_n * (best admissible-partition sum), where partitions are admissible
/// when their block minima form a member of S(gamma_n), gamma_n the
/// fundamental sequence of w^gamma. The limit is bracketed from below by the
/// monotone iteration and from above by a decreasing iteration started at the
/// majorant ||x||_1 / (1 - sum theta); "fixed point" means the stored values
/// were stationary across one full sweep, which pins the limit exactly for
/// the evaluated schedule head (the n-tail is folded into the upper bounds).
std::pair<NormValue, IterationTrace> z_norm(FamilyEval& ev, const Ordinal& gamma,
                                            const FamilyPtr& base, const ThetaSchedule& theta,
                                            const SparseVector& x, const Rat& tol,
                                            unsigned k_cap = 64);

/// Enclosure of the n-th component limit [x]_n.
NormValue z_norm_component(FamilyEval& ev, const Ordinal& gamma, const FamilyPtr& base,
                           const ThetaSchedule& theta, const SparseVector& x, const Rat& tol,
                           unsigned k_cap, unsigned n);

/// sup_n 2^(-n) ||x||_{lambda_n} for a limit ordinal lambda; exact because
/// 2^(-n) ||x||_1 eventually drops below the running best.
NormValue mixed_schreier_norm(FamilyEval& ev, const Ordinal& lambda, const SparseVector& x);

} // namespace schreier
