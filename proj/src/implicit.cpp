#include "schreier/implicit.hpp"

#include <algorithm>

namespace schreier {

ThetaSchedule ThetaSchedule::geometric(Rat scale, Rat ratio) {
    if (scale <= 0 || ratio <= 0 || ratio >= 1)
        throw DomainError("geometric schedule requires scale > 0 and 0 < ratio < 1");
    ThetaSchedule t(std::move(scale), std::move(ratio));
    if (t.total() >= 1) throw DomainError("theta schedule must sum below 1");
    return t;
}

ThetaSchedule ThetaSchedule::parse(const std::string& text) {
    const std::string prefix = "geometric:";
    if (text.rfind(prefix, 0) != 0)
        throw ParseError("unknown theta schedule: " + text);
    std::string rest = text.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
        Rat r = parse_rational(rest);
        return geometric(r * r, r); // theta_n = r^(n+1)
    }
    return geometric(parse_rational(rest.substr(0, colon)),
                     parse_rational(rest.substr(colon + 1)));
}

Rat ThetaSchedule::theta(unsigned n) const {
    if (n == 0) throw DomainError("theta indices start at 1");
    return scale_ * rat_pow(ratio_, n - 1);
}

Rat ThetaSchedule::sq_tail(unsigned N) const {
    // sum_{n>N} scale^2 ratio^(2(n-1)) = scale^2 ratio^(2N) / (1 - ratio^2)
    return scale_ * scale_ * rat_pow(ratio_, 2 * N) / (1 - ratio_ * ratio_);
}

std::string ThetaSchedule::to_string() const {
    return "geometric:" + rat_to_string(scale_) + ":" + rat_to_string(ratio_);
}

namespace {

// intervals of support positions [i..j]; values live on the upper triangle
struct ZEngine {
    FamilyEval& ev;
    const SparseVector& x;
    std::vector<std::uint32_t> supp;
    std::size_t m;
    unsigned head;
    const ThetaSchedule& theta;
    unsigned bits;

    std::vector<FamilyPtr> fams;                   // S(gamma_n), n = 1..head
    std::vector<Rat> theta_n, theta_sq;            // cached weights
    std::vector<Rat> base_norm;                    // |interval|_0
    std::vector<Rat> majorant;                     // ||interval x||_1 / (1 - total)
    // admissible minima position-lists per (interval, n)
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> adm;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * m + j; }

    ZEngine(FamilyEval& e, const Ordinal& gamma, const FamilyPtr& base,
            const ThetaSchedule& th, const SparseVector& vec, unsigned head_n, unsigned b)
        : ev(e), x(vec), theta(th), bits(b) {
        auto s = vec.support();
        supp.assign(s.begin(), s.end());
        m = supp.size();
        head = head_n;

        Ordinal wg = omega_pow(gamma);
        if (!wg.is_limit())
            throw DomainError("z_norm requires gamma >= 1 so that w^gamma is a limit");
        for (unsigned n = 1; n <= head; ++n) {
            fams.push_back(FamilyExpr::S(fundamental(wg, n)));
            theta_n.push_back(th.theta(n));
            theta_sq.push_back(theta_n.back() * theta_n.back());
        }

        base_norm.assign(m * m, Rat(0));
        majorant.assign(m * m, Rat(0));
        Rat slack = 1 - th.total();
        for (std::size_t i = 0; i < m; ++i) {
            SparseVector part;
            Rat l1(0);
            for (std::size_t j = i; j < m; ++j) {
                part.set(supp[j], x.at(supp[j]));
                l1 += rat_abs(x.at(supp[j]));
                base_norm[idx(i, j)] = *schreier_norm(ev, base, part).exact;
                majorant[idx(i, j)] = l1 / slack;
            }
        }

        // admissible minima sets: subsets M of window positions whose values
        // form a member of S(gamma_n); DFS with hereditary pruning
        adm.assign(m * m, {});
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                auto& lists = adm[idx(i, j)];
                lists.resize(head);
                for (unsigned n = 0; n < head; ++n) {
                    std::vector<std::size_t> cur;
                    std::vector<std::uint32_t> vals;
                    auto dfs = [&](auto&& self, std::size_t from) -> void {
                        for (std::size_t t = from; t <= j; ++t) {
                            cur.push_back(t);
                            vals.push_back(supp[t]);
                            if (ev.contains(fams[n], FiniteSet(vals))) {
                                lists[n].push_back(cur);
                                self(self, t + 1);
                            }
                            vals.pop_back();
                            cur.pop_back();
                        }
                    };
                    dfs(dfs, i);
                }
            }
    }

    static Interval vmax(const Interval& a, const Interval& b) { return max(a, b); }
    static Rat vmax(const Rat& a, const Rat& b) { return a > b ? a : b; }

    // best admissible partition sum for (i..j) at schedule index n (0-based)
    // under the given value table; the partition blocks are the runs between
    // consecutive minima, the last one extending to j
    template <class Get>
    auto best_sum(std::size_t i, std::size_t j, unsigned n, Get&& value) const {
        using V = decltype(value(0, 0));
        V best{};
        bool have = false;
        for (const auto& mins : adm[idx(i, j)][n]) {
            V sum{};
            for (std::size_t t = 0; t < mins.size(); ++t) {
                std::size_t a = mins[t];
                std::size_t b = (t + 1 < mins.size()) ? mins[t + 1] - 1 : j;
                sum += value(a, b);
            }
            if (!have) {
                best = sum;
                have = true;
            } else {
                best = vmax(best, sum);
            }
        }
        return best;
    }

    Interval sqrt_iv(const Interval& v) const {
        Rat lo = nth_root_enclosure(v.lo, 2, bits).lo;
        Rat hi = nth_root_enclosure(v.hi, 2, bits).hi;
        if (lo < 0) lo = 0;
        return Interval(lo, hi);
    }

    // one sweep of the monotone recursion over interval values
    std::vector<Interval> sweep_lower(const std::vector<Interval>& val) const {
        std::vector<Interval> next(val.size());
        Rat tail = theta.sq_tail(head);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                Interval agg2;
                for (unsigned n = 0; n < head; ++n) {
                    Interval b = best_sum(i, j, n,
                                          [&](std::size_t a, std::size_t c) -> Interval {
                                              return val[idx(a, c)];
                                          });
                    agg2 += theta_sq[n] * sq_nonneg(b);
                }
                const Rat& B = majorant[idx(i, j)];
                agg2.hi += tail * B * B;
                Interval agg = sqrt_iv(agg2);
                next[idx(i, j)] = max(val[idx(i, j)], agg);
            }
        return next;
    }

    // decreasing upper iteration: u >= F(u) is preserved by taking min
    std::vector<Rat> sweep_upper(const std::vector<Rat>& u) const {
        std::vector<Rat> next(u.size());
        Rat tail = theta.sq_tail(head);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j) {
                Rat agg2(0);
                for (unsigned n = 0; n < head; ++n) {
                    Rat b = best_sum(i, j, n, [&](std::size_t a, std::size_t c) -> Rat {
                        return u[idx(a, c)];
                    });
                    agg2 += theta_sq[n] * b * b;
                }
                const Rat& B = majorant[idx(i, j)];
                agg2 += tail * B * B;
                Rat agg = nth_root_enclosure(agg2, 2, bits).hi;
                Rat cand = std::max(base_norm[idx(i, j)], agg);
                next[idx(i, j)] = std::min(u[idx(i, j)], cand);
            }
        return next;
    }
};

unsigned tol_bits(const Rat& tol) {
    // number of bits needed so that 2^-bits <= tol
    unsigned b = 1;
    Rat v(1, 2);
    while (v > tol && b < 512) {
        v /= 2;
        ++b;
    }
    return b;
}

} // namespace

std::pair<NormValue, IterationTrace> z_norm(FamilyEval& ev, const Ordinal& gamma,
                                            const FamilyPtr& base, const ThetaSchedule& theta,
                                            const SparseVector& x, const Rat& tol,
                                            unsigned k_cap) {
    IterationTrace trace;
    if (x.is_zero()) {
        NormValue v = NormValue::from_exact(Rat(0));
        trace.steps.push_back({Rat(0), Rat(0)});
        return {v, trace};
    }
    if (tol <= 0) throw DomainError("tolerance must be positive");

    unsigned tb = tol_bits(tol);
    unsigned head = std::max(16u, tb + 16u);
    unsigned bits = tb + 64;
    ZEngine eng(ev, gamma, base, theta, x, head, bits);
    trace.theta_head = head;

    const std::size_t full = eng.idx(0, eng.m - 1);
    std::vector<Interval> val(eng.m * eng.m);
    for (std::size_t i = 0; i < eng.m; ++i)
        for (std::size_t j = i; j < eng.m; ++j)
            val[eng.idx(i, j)] = Interval(eng.base_norm[eng.idx(i, j)]);
    trace.steps.push_back({val[full].lo, val[full].hi});

    bool fixed = false;
    for (unsigned k = 1; k <= k_cap; ++k) {
        std::vector<Interval> next = eng.sweep_lower(val);
        // monotone in k and below the majorant, by construction
        if (next[full].lo < val[full].lo)
            throw Error("internal: z-norm iteration lost monotonicity");
        trace.steps.push_back({next[full].lo, next[full].hi});
        trace.iterations = k;
        if (next == val) {
            fixed = true;
            break;
        }
        val = std::move(next);
    }

    NormValue out;
    if (fixed) {
        trace.termination = IterationTrace::Termination::FixedPoint;
        out.lower = val[full].lo;
        out.upper = val[full].hi;
        if (val[full].is_point()) out.exact = val[full].lo;
        return {out, trace};
    }

    // cap hit: bracket the limit from above by the decreasing iteration
    std::vector<Rat> upper(eng.m * eng.m);
    for (std::size_t i = 0; i < eng.m; ++i)
        for (std::size_t j = i; j < eng.m; ++j)
            upper[eng.idx(i, j)] = eng.majorant[eng.idx(i, j)];
    for (unsigned sweep = 0; sweep < k_cap; ++sweep) {
        std::vector<Rat> next = eng.sweep_upper(upper);
        ++trace.upper_sweeps;
        if (next == upper) break;
        upper = std::move(next);
        if (upper[full] - val[full].lo < tol) break;
    }
    out.lower = val[full].lo;
    out.upper = std::max(upper[full], val[full].hi);
    trace.termination = (out.upper - out.lower < tol) ? IterationTrace::Termination::Tolerance
                                                      : IterationTrace::Termination::Cap;
    return {out, trace};
}

NormValue z_norm_component(FamilyEval& ev, const Ordinal& gamma, const FamilyPtr& base,
                           const ThetaSchedule& theta, const SparseVector& x, const Rat& tol,
                           unsigned k_cap, unsigned n) {
    if (n == 0) throw DomainError("component indices start at 1");
    if (x.is_zero()) return NormValue::from_exact(Rat(0));

    unsigned tb = tol_bits(tol);
    unsigned head = std::max({16u, tb + 16u, n});
    unsigned bits = tb + 64;
    ZEngine eng(ev, gamma, base, theta, x, head, bits);

    std::vector<Interval> val(eng.m * eng.m);
    for (std::size_t i = 0; i < eng.m; ++i)
        for (std::size_t j = i; j < eng.m; ++j)
            val[eng.idx(i, j)] = Interval(eng.base_norm[eng.idx(i, j)]);
    bool fixed = false;
    for (unsigned k = 1; k <= k_cap; ++k) {
        std::vector<Interval> next = eng.sweep_lower(val);
        if (next == val) {
            fixed = true;
            break;
        }
        val = std::move(next);
    }
    if (!fixed) {
        // widen with the decreasing upper iteration so the component bound
        // brackets the true limit values
        std::vector<Rat> upper(eng.m * eng.m);
        for (std::size_t i = 0; i < eng.m; ++i)
            for (std::size_t j = i; j < eng.m; ++j)
                upper[eng.idx(i, j)] = eng.majorant[eng.idx(i, j)];
        for (unsigned sweep = 0; sweep < k_cap; ++sweep) {
            std::vector<Rat> next = eng.sweep_upper(upper);
            if (next == upper) break;
            upper = std::move(next);
        }
        for (std::size_t i = 0; i < eng.m; ++i)
            for (std::size_t j = i; j < eng.m; ++j) {
                auto& v = val[eng.idx(i, j)];
                if (upper[eng.idx(i, j)] > v.hi) v.hi = upper[eng.idx(i, j)];
            }
    }

    NormValue out; // theta_n * best partition sum at the settled values
    Interval b = eng.best_sum(0, eng.m - 1, n - 1,
                              [&](std::size_t a, std::size_t c) -> Interval {
                                  return val[eng.idx(a, c)];
                              });
    Interval comp = eng.theta_n[n - 1] * b;
    out.lower = comp.lo;
    out.upper = comp.hi;
    if (comp.is_point()) out.exact = comp.lo;
    return out;
}

NormValue mixed_schreier_norm(FamilyEval& ev, const Ordinal& lambda, const SparseVector& x) {
    if (!lambda.is_limit())
        throw DomainError("mixed Schreier norm requires a limit ordinal");
    NormValue best = NormValue::from_exact(Rat(0));
    if (x.is_zero()) return best;
    Rat l1 = x.l1();
    Rat bound = l1 / 2; // 2^-n * ||x||_1 after n = 1
    Rat scale(1, 2);
    for (unsigned n = 1;; ++n) {
        NormValue v = schreier_norm(ev, FamilyExpr::S(fundamental(lambda, n)), x);
        Rat scaled = scale * *v.exact;
        if (scaled > *best.exact) {
            best = NormValue::from_exact(scaled);
            best.witness = v.witness;
        }
        scale /= 2;
        bound = scale * l1;
        if (bound <= *best.exact || bound == 0) break;
    }
    return best;
}

} // namespace schreier
