#include "schreier/norms.hpp"

#include <algorithm>
#include <functional>

namespace schreier {

namespace {

void check_support_cap(const FamilyEval& ev, const SparseVector& x) {
    if (x.support_size() > ev.cap())
        throw CapExceeded("support size " + std::to_string(x.support_size()) +
                          " exceeds enumeration cap " + std::to_string(ev.cap()));
}

} // namespace

NormValue schreier_norm(FamilyEval& ev, const FamilyPtr& f, const SparseVector& x) {
    check_support_cap(ev, x);
    NormValue out = NormValue::from_exact(Rat(0));
    out.witness.push_back(FiniteSet{});
    if (x.is_zero()) return out;

    const auto supp = x.support();
    Rat best(0);
    FiniteSet best_set;
    std::vector<std::uint32_t> cur;
    // preorder DFS in lexicographic order with hereditary pruning; the first
    // strict improvement wins, so the witness is the lex-least maximizer
    auto dfs = [&](auto&& self, std::size_t from, const Rat& mass) -> void {
        for (std::size_t j = from; j < supp.size(); ++j) {
            cur.push_back(supp[j]);
            FiniteSet cand(cur);
            if (ev.contains(f, cand)) {
                Rat m = mass + rat_abs(x.at(supp[j]));
                if (m > best) {
                    best = m;
                    best_set = cand;
                }
                self(self, j + 1, m);
            }
            cur.pop_back();
        }
    };
    dfs(dfs, 0, Rat(0));
    out = NormValue::from_exact(best);
    out.witness = {best_set};
    return out;
}

namespace {

// --- successive-block DP ----------------------------------------------------
// value(j) = best aggregate using support positions j..m-1:
//   max( value(j+1),  max over admissible blocks E starting at position j of
//        term(mass(E)) + value(index after max E) )
// Blocks range over all members of f inside the support; hereditary pruning
// keeps the DFS over block extensions manageable. Restricting blocks to the
// support is harmless: the l1 mass only sees E meet supp(x), and intersecting
// with the support preserves membership and successiveness.

struct BlockChoice {
    bool skip = true;
    FiniteSet block;
    std::size_t next = 0;
};

// exact DP for integer p >= 2
Rat dp_int(FamilyEval& ev, const FamilyPtr& f, const SparseVector& x, unsigned p,
           std::vector<BlockChoice>& choices) {
    const auto supp = x.support();
    const std::size_t m = supp.size();
    std::vector<std::optional<Rat>> memo(m + 1);
    std::vector<BlockChoice> choice(m + 1);
    memo[m] = Rat(0);

    std::function<Rat(std::size_t)> best = [&](std::size_t j) -> Rat {
        if (memo[j]) return *memo[j];
        Rat b = best(j + 1);
        BlockChoice ch; // skip by default
        std::vector<std::uint32_t> cur{supp[j]};
        auto consider = [&](const FiniteSet& block, const Rat& mass, std::size_t nxt) {
            Rat v = rat_pow(mass, p) + best(nxt);
            if (v > b) {
                b = v;
                ch = {false, block, nxt};
            }
        };
        auto dfs = [&](auto&& self, std::size_t last, const Rat& mass) -> void {
            for (std::size_t t = last + 1; t < m; ++t) {
                cur.push_back(supp[t]);
                FiniteSet cand(cur);
                if (ev.contains(f, cand)) {
                    Rat m2 = mass + rat_abs(x.at(supp[t]));
                    consider(cand, m2, t + 1);
                    self(self, t, m2);
                }
                cur.pop_back();
            }
        };
        FiniteSet first(cur);
        if (ev.contains(f, first)) {
            Rat mass0 = rat_abs(x.at(supp[j]));
            consider(first, mass0, j + 1);
            dfs(dfs, j, mass0);
        }
        memo[j] = b;
        choice[j] = ch;
        return b;
    };
    Rat total = best(0);
    choices = std::move(choice);
    return total;
}

// sum of base^p terms for non-integer rational p, compared via enclosures
struct PowSum {
    std::vector<Rat> bases;

    Interval enclose(const Rat& p, unsigned bits) const {
        Interval acc;
        unsigned a = static_cast<unsigned>(num(p).convert_to<std::uint64_t>());
        unsigned b = static_cast<unsigned>(den(p).convert_to<std::uint64_t>());
        for (const Rat& base : bases) {
            if (base == 0) continue;
            acc += nth_root_enclosure(rat_pow(base, a), b, bits);
        }
        return acc;
    }
};

// -1/0/+1 with refinement; unresolved ties at 2^-256 width count as equal
int pow_sum_cmp(const PowSum& a, const PowSum& b, const Rat& p) {
    for (unsigned bits = 64; bits <= 256; bits *= 2) {
        Interval ia = a.enclose(p, bits), ib = b.enclose(p, bits);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
    }
    return 0;
}

PowSum dp_rat(FamilyEval& ev, const FamilyPtr& f, const SparseVector& x, const Rat& p,
              std::vector<BlockChoice>& choices) {
    const auto supp = x.support();
    const std::size_t m = supp.size();
    std::vector<std::optional<PowSum>> memo(m + 1);
    std::vector<BlockChoice> choice(m + 1);
    memo[m] = PowSum{};

    std::function<PowSum(std::size_t)> best = [&](std::size_t j) -> PowSum {
        if (memo[j]) return *memo[j];
        PowSum b = best(j + 1);
        BlockChoice ch;
        std::vector<std::uint32_t> cur{supp[j]};
        auto consider = [&](const FiniteSet& block, const Rat& mass, std::size_t nxt) {
            PowSum v = best(nxt);
            v.bases.push_back(mass);
            if (pow_sum_cmp(v, b, p) > 0) {
                b = std::move(v);
                ch = {false, block, nxt};
            }
        };
        auto dfs = [&](auto&& self, std::size_t last, const Rat& mass) -> void {
            for (std::size_t t = last + 1; t < m; ++t) {
                cur.push_back(supp[t]);
                FiniteSet cand(cur);
                if (ev.contains(f, cand)) {
                    Rat m2 = mass + rat_abs(x.at(supp[t]));
                    consider(cand, m2, t + 1);
                    self(self, t, m2);
                }
                cur.pop_back();
            }
        };
        FiniteSet first(cur);
        if (ev.contains(f, first)) {
            Rat mass0 = rat_abs(x.at(supp[j]));
            consider(first, mass0, j + 1);
            dfs(dfs, j, mass0);
        }
        memo[j] = b;
        choice[j] = ch;
        return b;
    };
    PowSum total = best(0);
    choices = std::move(choice);
    return total;
}

std::vector<FiniteSet> reconstruct(const std::vector<BlockChoice>& choices, std::size_t m) {
    std::vector<FiniteSet> blocks;
    std::size_t j = 0;
    while (j < m) {
        if (choices[j].skip) {
            ++j;
        } else {
            blocks.push_back(choices[j].block);
            j = choices[j].next;
        }
    }
    return blocks;
}

} // namespace

NormValue baernstein_norm(FamilyEval& ev, const FamilyPtr& f, const PExponent& p,
                          const SparseVector& x, unsigned root_bits) {
    if (p.is_infinity()) return schreier_norm(ev, f, x);
    check_support_cap(ev, x);
    NormValue out;
    if (x.is_zero()) {
        out = NormValue::from_exact(Rat(0));
        out.exact_power = Rat(0);
        return out;
    }
    const std::size_t m = x.support_size();
    std::vector<BlockChoice> choices;

    if (p.is_integer()) {
        unsigned pi = p.as_integer();
        Rat power = dp_int(ev, f, x, pi, choices);
        out.exact_power = power;
        Interval root = nth_root_enclosure(power, pi, root_bits);
        out.lower = root.lo;
        out.upper = root.hi;
        if (root.is_point()) out.exact = root.lo;
        out.witness = reconstruct(choices, m);
        return out;
    }

    PowSum power = dp_rat(ev, f, x, p.value(), choices);
    Interval v = power.enclose(p.value(), root_bits + 16);
    // norm = power^(1/p) = (power^b)^(1/a) for p = a/b
    unsigned a = static_cast<unsigned>(num(p.value()).convert_to<std::uint64_t>());
    unsigned b = static_cast<unsigned>(den(p.value()).convert_to<std::uint64_t>());
    out.lower = nth_root_enclosure(rat_pow(v.lo, b), a, root_bits).lo;
    out.upper = nth_root_enclosure(rat_pow(v.hi, b), a, root_bits).hi;
    if (out.lower == out.upper) out.exact = out.lower;
    out.witness = reconstruct(choices, m);
    return out;
}

bool dual_certificate_check(FamilyEval& ev, const FamilyPtr& f,
                            const std::vector<DualPart>& parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        FiniteSet a = parts[i].functional.support();
        FiniteSet b = parts[i + 1].functional.support();
        if (a.empty() || b.empty() || !(a.max() < b.min()))
            throw MalformedDecomposition("functionals are not successive");
    }
    for (const auto& part : parts) {
        if (part.pieces.empty()) throw MalformedDecomposition("empty decomposition");
        Rat wsum(0);
        FiniteSet fsupp = part.functional.support();
        for (const auto& piece : part.pieces) {
            if (piece.weight < 0) throw MalformedDecomposition("negative weight");
            wsum += piece.weight;
            if (!piece.support.is_subset_of(fsupp))
                throw MalformedDecomposition("piece support leaks outside the functional");
        }
        if (wsum != 1) throw MalformedDecomposition("weights do not sum to 1");
    }

    // feasibility: per coordinate, |x*(k)| <= total weight of covering pieces
    // (unit-sup pieces realizing the convex combination then exist)
    for (const auto& part : parts) {
        for (const auto& [k, v] : part.functional.entries()) {
            Rat cover(0);
            for (const auto& piece : part.pieces)
                if (piece.support.contains(k)) cover += piece.weight;
            if (rat_abs(v) > cover) return false;
        }
    }

    // every cross-selection of one support per part unions into a member of f
    std::uint64_t combos = 1;
    for (const auto& part : parts) {
        combos *= part.pieces.size();
        if (combos > (1u << 20))
            throw CapExceeded("too many cross-selections in dual certificate");
    }
    for (std::uint64_t c = 0; c < combos; ++c) {
        std::uint64_t rem = c;
        FiniteSet u;
        for (const auto& part : parts) {
            std::size_t j = rem % part.pieces.size();
            rem /= part.pieces.size();
            u = set_union(u, part.pieces[j].support);
        }
        if (!ev.contains(f, u)) return false;
    }
    return true;
}

std::vector<std::pair<Ordinal, NormValue>> norm_profile(FamilyEval& ev, const SparseVector& x,
                                                        const std::vector<Ordinal>& betas) {
    std::vector<std::pair<Ordinal, NormValue>> out;
    out.reserve(betas.size());
    for (const Ordinal& beta : betas)
        out.emplace_back(beta, schreier_norm(ev, FamilyExpr::S(beta), x));
    return out;
}

NormValue direct_sum_norm(FamilyEval& ev, SumMode mode, const PExponent& p,
                          const std::vector<std::pair<NormContext, SparseVector>>& parts,
                          unsigned root_bits) {
    std::vector<NormValue> vals;
    vals.reserve(parts.size());
    for (const auto& [ctx, x] : parts) vals.push_back(norm_in_context(ev, ctx, x, root_bits));

    NormValue out;
    bool exact = true;
    for (const auto& v : vals) exact = exact && v.exact.has_value();

    switch (mode) {
    case SumMode::One: {
        for (const auto& v : vals) {
            out.lower += v.lower;
            out.upper += v.upper;
        }
        if (exact) out.exact = out.lower;
        return out;
    }
    case SumMode::CZero: {
        for (const auto& v : vals) {
            out.lower = std::max(out.lower, v.lower);
            out.upper = std::max(out.upper, v.upper);
        }
        if (exact) out.exact = out.lower;
        return out;
    }
    case SumMode::P: {
        if (p.is_infinity()) throw DomainError("p-sum requires a finite exponent");
        if (p.is_integer()) {
            unsigned pi = p.as_integer();
            Rat power_lo(0), power_hi(0);
            for (const auto& v : vals) {
                power_lo += rat_pow(v.lower, pi);
                power_hi += rat_pow(v.upper, pi);
            }
            if (exact) out.exact_power = power_lo;
            out.lower = nth_root_enclosure(power_lo, pi, root_bits).lo;
            out.upper = nth_root_enclosure(power_hi, pi, root_bits).hi;
            if (exact && out.lower == out.upper) out.exact = out.lower;
            return out;
        }
        unsigned a = static_cast<unsigned>(num(p.value()).convert_to<std::uint64_t>());
        unsigned b = static_cast<unsigned>(den(p.value()).convert_to<std::uint64_t>());
        Rat acc_lo(0), acc_hi(0);
        for (const auto& v : vals) {
            acc_lo += nth_root_enclosure(rat_pow(v.lower, a), b, root_bits + 16).lo;
            acc_hi += nth_root_enclosure(rat_pow(v.upper, a), b, root_bits + 16).hi;
        }
        out.lower = nth_root_enclosure(rat_pow(acc_lo, b), a, root_bits).lo;
        out.upper = nth_root_enclosure(rat_pow(acc_hi, b), a, root_bits).hi;
        if (out.lower == out.upper) out.exact = out.lower;
        return out;
    }
    }
    throw Error("unreachable");
}

} // namespace schreier
