#include "schreier/enclosure.hpp"

#include <boost/multiprecision/integer.hpp>

namespace schreier {

Int int_nth_root(const Int& x, unsigned n) {
    if (x < 0) throw DomainError("int_nth_root of negative");
    if (n == 0) throw DomainError("0th root");
    if (x == 0 || x == 1 || n == 1) return x;
    // binary search on bit length
    unsigned bl = boost::multiprecision::msb(x) + 1;
    Int lo = Int(1) << ((bl - 1) / n);
    Int hi = (Int(1) << (bl / n + 1));
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

bool nth_root_exact(const Rat& x, unsigned n, Rat& out) {
    if (x < 0) return false;
    Int rn = int_nth_root(num(x), n);
    if (boost::multiprecision::pow(rn, n) != num(x)) return false;
    Int rd = int_nth_root(den(x), n);
    if (boost::multiprecision::pow(rd, n) != den(x)) return false;
    out = Rat(rn, rd);
    return true;
}

Interval nth_root_enclosure(const Rat& x, unsigned n, unsigned bits) {
    if (x < 0) throw DomainError("nth_root_enclosure of negative");
    Rat exact;
    if (nth_root_exact(x, n, exact)) return Interval(exact);

    // k = floor((x * 2^(n*bits))^(1/n)), then verify bounds by exact comparison
    Int scaled_num = num(x) << (static_cast<unsigned long>(n) * bits);
    Int k = int_nth_root(scaled_num / den(x), n);
    Int scale = Int(1) << bits;
    Rat lo(k, scale), hi(k + 1, scale);
    while (rat_pow(lo, n) > x) lo -= Rat(1, scale);
    while (rat_pow(hi, n) < x) hi += Rat(1, scale);
    if (lo < 0) lo = 0;
    return Interval(lo, hi);
}

} // namespace schreier
