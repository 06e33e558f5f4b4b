#pragma once

#include <json.hpp>

#include "schreier/averages.hpp"
#include "schreier/norms.hpp"
#include "schreier/spreading.hpp"
#include "schreier/verify.hpp"

namespace schreier {

using nlohmann::json;

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

/// Nested term arrays: 0 is [], otherwise [[exponent, coeff], ...];
/// the omega_1 sentinel serializes as the string "w1".
json ordinal_to_json(const Ordinal& x);
Ordinal ordinal_from_json(const json& j);

json set_to_json(const FiniteSet& e);
FiniteSet set_from_json(const json& j);

/// {"coords": {"1": "3/2", ...}}; a bare coordinate map is also accepted.
json vector_to_json(const SparseVector& x);
SparseVector vector_from_json(const json& j);

/// {"weights": {"2": "1/2", ...}}
json measure_to_json(const ProbMeasure& p);
ProbMeasure measure_from_json(const json& j);

/// Rationals as strings plus a parallel "approx" float field.
json norm_value_to_json(const NormValue& v);
json spreading_report_to_json(const SpreadingReport& r);
json check_report_to_json(const CheckReport& r);

} // namespace schreier
