#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "arcval/arc.hpp"
#include "arcval/blowup.hpp"
#include "arcval/cone.hpp"
#include "arcval/errors.hpp"
#include "arcval/mather.hpp"
#include "arcval/oracle.hpp"
#include "arcval/polynomial.hpp"

namespace arcval {

// Canonical interchange format: ordered keys, exact rationals as "p/q"
// strings, two-space indentation. Serializing a parsed canonical file
// reproduces it byte for byte.
using Json = nlohmann::ordered_json;

namespace io {

inline void check_fields(const Json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw InputError(what + ": unknown field '" + key + "'");
}

inline const Json& require_field(const Json& j, const std::string& key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(what + ": missing field '" + key + "'");
    return *it;
}

inline Integer to_integer(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    if (j.is_string()) {
        Rational r = parse_rational(j.get<std::string>());
        if (denominator(r) != 1) throw InputError(what + ": expected an integer");
        return numerator(r);
    }
    throw InputError(what + ": expected an integer (number or string)");
}

inline Rational to_rational(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(Integer(j.get<unsigned long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError(what + ": expected an exact rational as a \"p/q\" string");
}

inline Json integer_json(const Integer& v) {
    // plain JSON number when it fits, decimal string beyond that
    static const Integer lo = Integer(std::numeric_limits<long long>::min());
    static const Integer hi = Integer(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return Json(static_cast<long long>(v));
    return Json(v.str());
}

inline std::vector<Integer> to_integer_vector(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array");
    std::vector<Integer> out;
    for (const auto& x : j) out.push_back(to_integer(x, what));
    return out;
}

inline Json integer_vector_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

// ---- cone ------------------------------------------------------------

inline Cone parse_cone(const Json& j) {
    check_fields(j, {"rank", "rays"}, "cone");
    Integer rank = to_integer(require_field(j, "rank", "cone"), "cone.rank");
    if (rank < 1) throw InputError("cone.rank: must be >= 1");
    const Json& rays_json = require_field(j, "rays", "cone");
    if (!rays_json.is_array()) throw InputError("cone.rays: expected an array");
    std::vector<LatticeVector> rays;
    for (const auto& r : rays_json) {
        auto coords = to_integer_vector(r, "cone.rays");
        if (coords.size() != static_cast<std::size_t>(rank))
            throw InputError("cone.rays: ray of length " + std::to_string(coords.size()) +
                             " does not match rank " + rank.str());
        rays.emplace_back(std::move(coords));
    }
    return Cone(static_cast<std::size_t>(rank), std::move(rays));
}

inline Json cone_json(const Cone& c) {
    Json j;
    j["rank"] = static_cast<long long>(c.rank());
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(integer_vector_json(r.coords()));
    j["rays"] = rays;
    return j;
}

inline Json basis_json(const SemigroupBasis& b) {
    Json j;
    Json elems = Json::array();
    for (const auto& u : b.elements) elems.push_back(integer_vector_json(u.coords()));
    j["elements"] = elems;
    return j;
}

inline SemigroupBasis parse_basis(const Json& j, std::size_t rank) {
    check_fields(j, {"elements"}, "basis");
    SemigroupBasis b;
    b.rank = rank;
    for (const auto& e : require_field(j, "elements", "basis")) {
        auto coords = to_integer_vector(e, "basis.elements");
        if (coords.size() != rank) throw InputError("basis.elements: rank mismatch");
        b.elements.emplace_back(std::move(coords));
    }
    return b;
}

// ---- polynomial ------------------------------------------------------

inline LaurentPolynomial parse_poly(const Json& j) {
    check_fields(j, {"rank", "terms"}, "polynomial");
    Integer rank = to_integer(require_field(j, "rank", "polynomial"), "polynomial.rank");
    if (rank < 1) throw InputError("polynomial.rank: must be >= 1");
    LaurentPolynomial f(static_cast<std::size_t>(rank));
    for (const auto& t : require_field(j, "terms", "polynomial")) {
        check_fields(t, {"exp", "coef"}, "polynomial.terms");
        auto e = to_integer_vector(require_field(t, "exp", "polynomial.terms"), "term.exp");
        if (e.size() != static_cast<std::size_t>(rank))
            throw InputError("term.exp: rank mismatch");
        Rational c = to_rational(require_field(t, "coef", "polynomial.terms"), "term.coef");
        f.add_term(std::move(e), c);
    }
    return f;
}

inline Json poly_json(const LaurentPolynomial& f) {
    Json j;
    j["rank"] = static_cast<long long>(f.rank());
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["exp"] = integer_vector_json(e);
        t["coef"] = rational_to_string(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

// ---- tower -----------------------------------------------------------

inline DivisorialValuation parse_tower(const Json& j) {
    check_fields(j, {"rank", "names", "steps", "q"}, "tower");
    Integer rank = to_integer(require_field(j, "rank", "tower"), "tower.rank");
    if (rank < 1) throw InputError("tower.rank: must be >= 1");
    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& n : j["names"]) {
            if (!n.is_string()) throw InputError("tower.names: expected strings");
            names.push_back(n.get<std::string>());
        }
    }
    std::vector<TowerStep> steps;
    for (const auto& s : require_field(j, "steps", "tower")) {
        check_fields(s, {"center", "chart"}, "tower.steps");
        TowerStep step;
        for (const auto& c : require_field(s, "center", "tower.steps"))
            step.center.push_back(to_rational(c, "step.center"));
        Integer chart = to_integer(require_field(s, "chart", "tower.steps"), "step.chart");
        if (chart < 1 || chart > rank) throw InputError("step.chart: out of range");
        step.chart = static_cast<int>(chart);
        steps.push_back(std::move(step));
    }
    Integer q = 1;
    if (j.contains("q")) q = to_integer(j["q"], "tower.q");
    return DivisorialValuation(
        BlowupTower(static_cast<std::size_t>(rank), std::move(steps), std::move(names)), q);
}

inline Json tower_json(const DivisorialValuation& v) {
    Json j;
    j["rank"] = static_cast<long long>(v.tower.rank());
    j["names"] = v.tower.names();
    Json steps = Json::array();
    for (const auto& s : v.tower.steps()) {
        Json step;
        Json center = Json::array();
        for (const auto& c : s.center) center.push_back(rational_to_string(c));
        step["center"] = center;
        step["chart"] = s.chart;
        steps.push_back(step);
    }
    j["steps"] = steps;
    j["q"] = integer_json(v.q);
    return j;
}

// ---- arc -------------------------------------------------------------

inline TruncatedArc parse_arc(const Json& j) {
    check_fields(j, {"rank", "shift", "units", "truncation"}, "arc");
    Integer rank = to_integer(require_field(j, "rank", "arc"), "arc.rank");
    if (rank < 1) throw InputError("arc.rank: must be >= 1");
    auto shift = to_integer_vector(require_field(j, "shift", "arc"), "arc.shift");
    if (shift.size() != static_cast<std::size_t>(rank)) throw InputError("arc.shift: rank mismatch");
    Integer trunc = to_integer(require_field(j, "truncation", "arc"), "arc.truncation");
    if (trunc < 0) throw InputError("arc.truncation: must be >= 0");
    std::vector<TruncatedSeries> units;
    for (const auto& u : require_field(j, "units", "arc")) {
        std::vector<Rational> coeffs;
        for (const auto& c : u) coeffs.push_back(to_rational(c, "arc.units"));
        units.emplace_back(std::move(coeffs), static_cast<int>(trunc));
    }
    return TruncatedArc(LatticeVector{std::move(shift)}, std::move(units),
                        static_cast<int>(trunc));
}

inline Json arc_json(const TruncatedArc& arc) {
    Json j;
    j["rank"] = static_cast<long long>(arc.rank());
    j["shift"] = integer_vector_json(arc.shift().coords());
    Json units = Json::array();
    for (const auto& u : arc.units()) {
        Json coeffs = Json::array();
        for (const auto& c : u.coeffs()) coeffs.push_back(rational_to_string(c));
        units.push_back(coeffs);
    }
    j["units"] = units;
    j["truncation"] = arc.truncation();
    return j;
}

// ---- conditions ------------------------------------------------------

inline GeneratingConditions parse_conditions(const Json& j, std::size_t expected_rank) {
    check_fields(j, {"rank", "conditions"}, "conditions");
    Integer rank = to_integer(require_field(j, "rank", "conditions"), "conditions.rank");
    if (expected_rank != 0 && static_cast<std::size_t>(rank) != expected_rank)
        throw InputError("conditions.rank: does not match the tower rank");
    GeneratingConditions out;
    for (const auto& c : require_field(j, "conditions", "conditions")) {
        check_fields(c, {"poly", "value"}, "conditions.conditions");
        LaurentPolynomial f = parse_poly(require_field(c, "poly", "condition"));
        if (f.rank() != static_cast<std::size_t>(rank))
            throw InputError("condition.poly: rank mismatch");
        Integer v = to_integer(require_field(c, "value", "condition"), "condition.value");
        out.push_back({std::move(f), std::move(v)});
    }
    return out;
}

inline Json conditions_json(const GeneratingConditions& conds, std::size_t rank) {
    Json j;
    j["rank"] = static_cast<long long>(rank);
    Json list = Json::array();
    for (const auto& c : conds) {
        Json item;
        item["poly"] = poly_json(c.poly);
        item["value"] = integer_json(c.value);
        list.push_back(item);
    }
    j["conditions"] = list;
    return j;
}

// ---- reports ---------------------------------------------------------

inline Json mather_json(const MatherReport& r) {
    Json j;
    j["q"] = integer_json(r.q);
    j["k_mather"] = integer_json(r.k_mather);
    j["codim"] = integer_json(r.codim);
    Json subset = Json::array();
    for (const auto& u : r.argmin_subset) subset.push_back(integer_vector_json(u.coords()));
    j["argmin_subset"] = subset;
    return j;
}

inline Json criterion_json(const CriterionReport& r) {
    Json j;
    j["cond_values"] = r.cond_values;
    j["cond_codim"] = r.cond_codim;
    j["concluded"] = r.concluded;
    Json witnesses = Json::array();
    for (const auto& w : r.equality_witness) {
        Json item;
        item["name"] = w.name;
        item["lhs"] = integer_json(w.lhs);
        item["rhs"] = integer_json(w.rhs);
        item["holds"] = w.holds;
        witnesses.push_back(item);
    }
    j["equality_witness"] = witnesses;
    if (r.concluded) {
        Json cons;
        cons["q"] = integer_json(r.multiplicity);
        cons["weights"] = integer_vector_json(r.weight_vector);
        j["consequences"] = cons;
    }
    return j;
}

inline Json oracle_json(const OracleReport& r) {
    Json j;
    j["candidates_checked"] = static_cast<long long>(r.candidates_checked);
    j["matched"] = static_cast<long long>(r.matched);
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json item;
        item["candidate"] = viol.candidate;
        item["probe"] = viol.probe;
        item["got"] = integer_json(viol.got);
        item["expected"] = integer_json(viol.expected);
        v.push_back(item);
    }
    j["violations"] = v;
    j["conclusive"] = r.conclusive();
    j["ok"] = r.ok();
    return j;
}

// ---- files -----------------------------------------------------------

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(what + ": JSON parse error at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

inline Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(text, path);
}

} // namespace io
} // namespace arcval
