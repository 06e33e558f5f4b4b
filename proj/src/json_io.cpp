#include "schreier/json_io.hpp"

namespace schreier {

json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as string or integer");
}

json ordinal_to_json(const Ordinal& x) {
    if (x.is_omega1()) return "w1";
    json terms = json::array();
    for (std::size_t i = 0; i < x.term_count(); ++i)
        terms.push_back(json::array({ordinal_to_json(x.exponent(i)), x.coeff(i)}));
    return terms;
}

Ordinal ordinal_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        return parse_ordinal(s);
    }
    if (!j.is_array()) throw ParseError("expected an ordinal term array");
    Ordinal acc;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("ordinal terms are [exponent, coeff] pairs");
        Ordinal e = ordinal_from_json(term[0]);
        std::uint64_t c = term[1].get<std::uint64_t>();
        acc = ord_add(acc, ord_mul(omega_pow(e), Ordinal::from_nat(c)));
    }
    return acc;
}

json set_to_json(const FiniteSet& e) {
    json arr = json::array();
    for (std::uint32_t k : e) arr.push_back(k);
    return arr;
}

FiniteSet set_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a set as an array of naturals");
    std::vector<std::uint32_t> v;
    for (const auto& x : j) v.push_back(x.get<std::uint32_t>());
    return FiniteSet(std::move(v));
}

json vector_to_json(const SparseVector& x) {
    json coords = json::object();
    for (const auto& [k, q] : x.entries()) coords[std::to_string(k)] = rat_to_json(q);
    return json{{"coords", coords}};
}

SparseVector vector_from_json(const json& j) {
    const json* coords = &j;
    if (j.is_object() && j.contains("coords")) coords = &j.at("coords");
    if (!coords->is_object()) throw ParseError("expected a coordinate map");
    SparseVector x;
    for (auto it = coords->begin(); it != coords->end(); ++it)
        x.set(static_cast<std::uint32_t>(std::stoul(it.key())), rat_from_json(it.value()));
    return x;
}

json measure_to_json(const ProbMeasure& p) {
    json weights = json::object();
    for (const auto& [k, w] : p.weights()) weights[std::to_string(k)] = rat_to_json(w);
    return json{{"weights", weights}};
}

ProbMeasure measure_from_json(const json& j) {
    const json* weights = &j;
    if (j.is_object() && j.contains("weights")) weights = &j.at("weights");
    if (!weights->is_object()) throw ParseError("expected a weight map");
    ProbMeasure p;
    for (auto it = weights->begin(); it != weights->end(); ++it)
        p.add(static_cast<std::uint32_t>(std::stoul(it.key())), rat_from_json(it.value()));
    return p;
}

json norm_value_to_json(const NormValue& v) {
    json out;
    if (v.exact) {
        out["value"] = rat_to_json(*v.exact);
        out["approx"] = rat_to_double(*v.exact);
    } else {
        out["lower"] = rat_to_json(v.lower);
        out["upper"] = rat_to_json(v.upper);
        out["approx"] = (rat_to_double(v.lower) + rat_to_double(v.upper)) / 2;
    }
    if (v.exact_power) out["power"] = rat_to_json(*v.exact_power);
    if (v.witness.size() == 1) {
        out["witness"] = set_to_json(v.witness.front());
    } else if (!v.witness.empty()) {
        json parts = json::array();
        for (const auto& e : v.witness) parts.push_back(set_to_json(e));
        out["witness"] = parts;
    }
    return out;
}

json spreading_report_to_json(const SpreadingReport& r) {
    const char* mode = r.mode == SpreadingReport::Mode::Ell1Lower  ? "ell1-lower"
                       : r.mode == SpreadingReport::Mode::C0Lower ? "c0-lower"
                                                                  : "c0-upper";
    json coeffs = json::array();
    for (const Rat& c : r.coefficients) coeffs.push_back(rat_to_json(c));
    return json{{"mode", mode},
                {"constant", rat_to_json(r.constant)},
                {"approx", rat_to_double(r.constant)},
                {"witness", set_to_json(r.witness_set)},
                {"coefficients", coeffs}};
}

json check_report_to_json(const CheckReport& r) {
    json out{{"id", r.id},
             {"params", r.params},
             {"verdict", CheckReport::verdict_name(r.verdict)},
             {"detail", r.detail},
             {"instances", r.instances},
             {"runtime_ms", r.runtime_ms},
             {"seed", r.seed}};
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    return out;
}

} // namespace schreier
