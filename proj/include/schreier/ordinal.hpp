#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

/// Ordinals below epsilon_0 in Cantor normal form: a sum of terms
/// w^e * c with strictly decreasing exponents e (themselves ordinals) and
/// integer coefficients c >= 1. The empty sum is 0.
///
/// A distinct omega_1 sentinel is representable as a diagnostic label; it
/// compares above every CNF ordinal and rejects all arithmetic.
class Ordinal {
public:
    Ordinal() = default; // zero

    static Ordinal from_nat(std::uint64_t n);
    static Ordinal omega();
    static Ordinal omega1();

    bool is_omega1() const { return omega1_; }
    bool is_zero() const { return !omega1_ && exps_.empty(); }
    /// Finite (a natural number, possibly 0)?
    bool is_nat() const;
    std::uint64_t as_nat() const; // pre: is_nat()
    bool is_successor() const;
    bool is_limit() const; // nonzero and not a successor

    std::size_t term_count() const { return exps_.size(); }
    const Ordinal& exponent(std::size_t i) const { return exps_[i]; }
    std::uint64_t coeff(std::size_t i) const { return coeffs_[i]; }

    /// Nesting depth of the CNF (0 for naturals). Guards runaway expressions.
    unsigned height() const;

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend bool operator<(const Ordinal& a, const Ordinal& b);
    friend bool operator<=(const Ordinal& a, const Ordinal& b) { return a == b || a < b; }
    friend bool operator>(const Ordinal& a, const Ordinal& b) { return b < a; }
    friend bool operator>=(const Ordinal& a, const Ordinal& b) { return b <= a; }
    friend bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }

    friend Ordinal ord_add(const Ordinal& a, const Ordinal& b);
    friend Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
    friend Ordinal omega_pow(const Ordinal& a);

private:
    // parallel lists: exps_ strictly decreasing, coeffs_[i] >= 1
    std::vector<Ordinal> exps_;
    std::vector<std::uint64_t> coeffs_;
    bool omega1_ = false;

    void push_term(Ordinal e, std::uint64_t c) {
        exps_.push_back(std::move(e));
        coeffs_.push_back(c);
    }
    void require_cnf(const char* op) const;
};

/// -1, 0, +1.
int ord_cmp(const Ordinal& a, const Ordinal& b);

/// Leading monomial w^{e1}; 0 for 0.
Ordinal lambda_of(const Ordinal& x);

/// The unique d with g + d = x. Errors if g > x.
Ordinal left_subtract(const Ordinal& g, const Ordinal& x);

/// Predecessor of a successor ordinal.
Ordinal predecessor(const Ordinal& x);

/// Fixed fundamental-sequence convention for limits below epsilon_0:
///   w[n] = n,  (mu + w^(a+1))[n] = mu + w^a * n,  (mu + w^l)[n] = mu + w^(l[n]).
Ordinal fundamental(const Ordinal& x, std::uint64_t n);

/// Text form: "w^{e}*c" terms joined by '+', "w" for omega, bare naturals for
/// finite parts; e.g. "w^2*3+w*5+2", "w^{w}+1". Round-trips bit-exactly.
std::string format_ordinal(const Ordinal& x);
Ordinal parse_ordinal(const std::string& text, unsigned max_height = 64);

} // namespace schreier
