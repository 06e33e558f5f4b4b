#pragma once

#include "schreier/rational.hpp"

namespace schreier {

/// Closed rational interval [lo, hi] bracketing a real value.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    explicit Interval(const Rat& v) : lo(v), hi(v) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }

    /// Scale by a non-negative rational.
    friend Interval operator*(const Rat& c, const Interval& v) {
        return Interval(c * v.lo, c * v.hi);
    }

    friend Interval max(const Interval& a, const Interval& b) {
        return Interval(a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Square of an interval of non-negative values.
inline Interval sq_nonneg(const Interval& v) { return Interval(v.lo * v.lo, v.hi * v.hi); }

/// True (and sets out) iff x is the n-th power of a rational. x >= 0, n >= 1.
bool nth_root_exact(const Rat& x, unsigned n, Rat& out);

/// Encloses x^(1/n) for x >= 0 within 2^-bits; exact roots give point intervals.
Interval nth_root_enclosure(const Rat& x, unsigned n, unsigned bits);

/// Integer floor n-th root.
Int int_nth_root(const Int& x, unsigned n);

} // namespace schreier
