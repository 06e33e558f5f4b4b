#include "schreier/spreading.hpp"

#include <algorithm>

#include "schreier/lp.hpp"

namespace schreier {

namespace {

void require_sup_context(const NormContext& ctx, const char* op) {
    if (!ctx.p.is_infinity())
        throw DomainError(std::string(op) +
                          " requires a sup-type (p=inf) ambient context; the finite-p "
                          "aggregate is not polyhedral");
}

// members of f inside the coordinate set u, via hereditary DFS
std::vector<FiniteSet> members_within(FamilyEval& ev, const FamilyPtr& f, const FiniteSet& u) {
    std::vector<FiniteSet> out;
    std::vector<std::uint32_t> cur;
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t j = from; j < u.size(); ++j) {
            cur.push_back(u[j]);
            FiniteSet cand(cur);
            if (ev.contains(f, cand)) {
                out.push_back(cand);
                self(self, j + 1);
            }
            cur.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<FiniteSet> maximal_members_within(FamilyEval& ev, const FamilyPtr& f,
                                              const FiniteSet& u) {
    auto members = members_within(ev, f, u);
    std::vector<FiniteSet> maximal;
    for (const auto& e : members) {
        bool dominated = false;
        for (const auto& g : members)
            if (g.size() > e.size() && e.is_subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(e);
    }
    return maximal;
}

// exact min of ||sum_n a_n x_n|| over the facet { a_n = eps_n s_n, s >= 0,
// sum s = 1 } of the l1 sphere, where the sup-norm is encoded by epigraph
// rows over the maximal generator sets
struct FacetSolution {
    Rat value;
    std::vector<Rat> s;
};

FacetSolution solve_facet(const std::vector<const SparseVector*>& xs,
                          const std::vector<int>& signs, const FiniteSet& u,
                          const std::vector<FiniteSet>& gens) {
    const std::size_t nf = xs.size(), nu = u.size(), ng = gens.size();
    // variables: s (nf) | w (nu) | t | slacks (2*nu + ng)
    const std::size_t vt = nf + nu;
    const std::size_t nvars = nf + nu + 1 + 2 * nu + ng;
    LinearProgram lp;
    lp.cost.assign(nvars, Rat(0));
    lp.cost[vt] = 1;
    std::size_t slack = nf + nu + 1;

    std::vector<std::uint32_t> coords(u.begin(), u.end());
    for (std::size_t i = 0; i < nu; ++i) {
        // w_i - sum_n eps_n s_n x_n[coord_i] >= 0, and with + sum
        for (int dir : {+1, -1}) {
            std::vector<Rat> row(nvars, Rat(0));
            row[nf + i] = 1;
            for (std::size_t n = 0; n < nf; ++n)
                row[n] = Rat(-dir * signs[n]) * xs[n]->at(coords[i]);
            row[slack++] = -1;
            lp.rows.push_back(std::move(row));
            lp.rhs.push_back(Rat(0));
        }
    }
    for (std::size_t g = 0; g < ng; ++g) {
        std::vector<Rat> row(nvars, Rat(0));
        row[vt] = 1;
        for (std::uint32_t k : gens[g]) {
            std::size_t i = std::lower_bound(coords.begin(), coords.end(), k) - coords.begin();
            row[nf + i] = -1;
        }
        row[slack++] = -1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rat(0));
    }
    {
        std::vector<Rat> row(nvars, Rat(0));
        for (std::size_t n = 0; n < nf; ++n) row[n] = 1;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(Rat(1));
    }

    LPResult res = solve_lp(lp);
    if (res.status != LPResult::Status::Optimal)
        throw Error("facet LP unexpectedly infeasible or unbounded");
    FacetSolution out;
    out.value = res.objective;
    out.s.assign(res.solution.begin(), res.solution.begin() + nf);
    return out;
}

} // namespace

SpreadingReport ell1_constant(FamilyEval& ev, const FamilyPtr& f, const SequenceData& s,
                              unsigned n_max, std::uint64_t lp_cap) {
    require_sup_context(s.context, "ell1_constant");
    if (n_max > s.vectors.size())
        throw DomainError("n_max exceeds the number of supplied vectors");
    auto members = ev.enumerate(f, n_max);
    std::vector<FiniteSet> candidates;
    for (auto& e : members)
        if (!e.empty()) candidates.push_back(e);
    if (candidates.empty()) throw EmptyFamily("family has no nonempty member below n_max");
    std::sort(candidates.begin(), candidates.end()); // lex order for tie-breaking

    bool have = false;
    SpreadingReport best;
    best.mode = SpreadingReport::Mode::Ell1Lower;

    for (const auto& F : candidates) {
        std::vector<const SparseVector*> xs;
        FiniteSet u;
        for (std::uint32_t n : F) {
            xs.push_back(&s.vectors[n - 1]);
            u = set_union(u, s.vectors[n - 1].support());
        }
        auto gens = maximal_members_within(ev, s.context.family, u);
        std::uint64_t facets = F.size() ? (1ull << (F.size() - 1)) : 1;
        if (facets * std::max<std::uint64_t>(gens.size(), 1) > lp_cap)
            throw CapExceeded("LP generator budget exceeded for F = " + F.to_string());

        for (std::uint64_t pat = 0; pat < facets; ++pat) {
            std::vector<int> signs(F.size(), +1); // first sign fixed by symmetry
            for (std::size_t n = 1; n < F.size(); ++n)
                if (pat & (1ull << (n - 1))) signs[n] = -1;
            FacetSolution sol = solve_facet(xs, signs, u, gens);
            if (!have || sol.value < best.constant) {
                have = true;
                best.constant = sol.value;
                best.witness_set = F;
                best.coefficients.clear();
                for (std::size_t n = 0; n < F.size(); ++n)
                    best.coefficients.push_back(Rat(signs[n]) * sol.s[n]);
            }
        }
    }
    return best;
}

std::pair<SpreadingReport, SpreadingReport> c0_constants(FamilyEval& ev, const FamilyPtr& f,
                                                         const SequenceData& s, unsigned n_max,
                                                         unsigned sign_cap) {
    require_sup_context(s.context, "c0_constants");
    if (n_max > s.vectors.size())
        throw DomainError("n_max exceeds the number of supplied vectors");
    auto members = ev.enumerate(f, n_max);
    std::vector<FiniteSet> candidates;
    for (auto& e : members)
        if (!e.empty()) candidates.push_back(e);
    if (candidates.empty()) throw EmptyFamily("family has no nonempty member below n_max");
    std::sort(candidates.begin(), candidates.end());

    bool have = false;
    SpreadingReport lo, hi;
    lo.mode = SpreadingReport::Mode::C0Lower;
    hi.mode = SpreadingReport::Mode::C0Upper;

    for (const auto& F : candidates) {
        if (F.size() > sign_cap)
            throw CapExceeded("member " + F.to_string() + " exceeds the sign cap");
        std::uint64_t half = F.size() ? (1ull << (F.size() - 1)) : 1;
        for (std::uint64_t pat = 0; pat < half; ++pat) {
            SparseVector y;
            std::vector<Rat> signs;
            std::size_t idx = 0;
            for (std::uint32_t n : F) {
                int sg = (idx && (pat & (1ull << (idx - 1)))) ? -1 : +1;
                y.add_scaled(Rat(sg), s.vectors[n - 1]);
                signs.push_back(Rat(sg));
                ++idx;
            }
            NormValue v = norm_in_context(ev, s.context, y);
            if (!v.exact) throw DomainError("c0_constants requires an exact ambient norm");
            if (!have || *v.exact < lo.constant) {
                lo.constant = *v.exact;
                lo.witness_set = F;
                lo.coefficients = signs;
            }
            if (!have || *v.exact > hi.constant) {
                hi.constant = *v.exact;
                hi.witness_set = F;
                hi.coefficients = signs;
            }
            have = true;
        }
    }
    return {lo, hi};
}

SequenceData average_block(FamilyEval& ev, const Ordinal& xi, const FiniteSet& m,
                           const SequenceData& s) {
    SequenceData out;
    out.context = s.context;
    for (unsigned n = 1;; ++n) {
        ProbMeasure mu;
        try {
            mu = repeated_average(ev, xi, m, n);
        } catch (const PrefixExhausted&) {
            break;
        }
        if (mu.support().max() > s.vectors.size()) break;
        SparseVector y;
        for (const auto& [i, w] : mu.weights()) y.add_scaled(w, s.vectors[i - 1]);
        out.vectors.push_back(std::move(y));
    }
    if (out.vectors.empty())
        throw PrefixExhausted("prefix supports no complete averaged block");
    return out;
}

Rat c0_prefix_criterion(FamilyEval& ev, const FamilyPtr& f, const SequenceData& s,
                        const FiniteSet& m) {
    require_sup_context(s.context, "c0_prefix_criterion");
    if (m.size() > 20) throw CapExceeded("prefix too long for order-subset enumeration");
    bool any = false;
    Rat best(0);
    for (std::uint64_t mask = 1; mask < (1ull << m.size()); ++mask) {
        std::vector<std::uint32_t> v;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (mask & (1ull << k)) v.push_back(m[k]);
        auto seg = ev.try_initial_segment(f, FiniteSet(v));
        if (!seg || seg->max() > s.vectors.size()) continue;
        SparseVector y;
        for (std::uint32_t n : *seg) y.add_scaled(Rat(1), s.vectors[n - 1]);
        NormValue val = norm_in_context(ev, s.context, y);
        if (!val.exact) throw DomainError("c0_prefix_criterion requires an exact ambient norm");
        any = true;
        if (*val.exact > best) best = *val.exact;
    }
    if (!any)
        throw PrefixExhausted("no order-subset of " + m.to_string() +
                              " carries a complete maximal segment");
    return best;
}

} // namespace schreier
