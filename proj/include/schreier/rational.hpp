#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// "3/2", "-7", "0". Round-trips with parse_rational.
inline std::string rat_to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline double rat_to_double(const Rat& q) { return q.template convert_to<double>(); }

/// Accepts "a", "a/b", optional leading '-', and "2^-40" style dyadic powers.
Rat parse_rational(const std::string& text);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// q^e for a (small) non-negative integer exponent.
Rat rat_pow(const Rat& q, unsigned e);

} // namespace schreier
