#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanout/adequacy.hpp"
#include "fanout/builtins.hpp"
#include "fanout/circuit.hpp"
#include "fanout/coupling.hpp"
#include "fanout/error.hpp"
#include "fanout/geometry.hpp"
#include "fanout/hamiltonian.hpp"
#include "fanout/search5.hpp"
#include "fanout/standard_position.hpp"
#include "fanout/tables.hpp"

namespace fanout::io {

using Json = nlohmann::ordered_json;

inline std::string rational_string(const Rational& r) { return r.to_string(); }

inline Json optional_rational(const std::optional<Rational>& r) { return r ? Json(r->to_string()) : Json(nullptr); }

namespace detail {

[[noreturn]] inline void bad_field(const std::string& field, const std::string& why) {
    throw Error(ErrorKind::ParseError, "field '" + field + "': " + why);
}

inline const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) bad_field(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad_field(path + "." + key, "missing");
    return *it;
}

inline Rational rational_field(const Json& v, const std::string& path) {
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
    } catch (const Error& e) {
        bad_field(path, e.what());
    }
    bad_field(path, "expected a rational string such as \"3/4\"");
}

inline long long int_field(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) bad_field(path, "expected an integer");
    return v.get<long long>();
}

}  // namespace detail

/// {"n": int, "couplings": [{"i": int, "j": int, "value": "p/q"}, ...]}, 1-based.
inline CouplingSet couplings_from_json(const Json& j) {
    const long long n = detail::int_field(detail::require(j, "n", "$"), "$.n");
    if (n < 1 || n > 64) detail::bad_field("$.n", "must be between 1 and 64");
    const auto nn = static_cast<std::size_t>(n);
    const Json& list = detail::require(j, "couplings", "$");
    if (!list.is_array()) detail::bad_field("$.couplings", "expected an array");
    std::vector<std::optional<Rational>> values(pair_count(nn));
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string path = "$.couplings[" + std::to_string(k) + "]";
        const Json& e = list[k];
        long long i = detail::int_field(detail::require(e, "i", path), path + ".i");
        long long jj = detail::int_field(detail::require(e, "j", path), path + ".j");
        if (i < 1 || jj < 1 || i > n || jj > n || i == jj) detail::bad_field(path, "invalid pair {i, j}");
        Rational v = detail::rational_field(detail::require(e, "value", path), path + ".value");
        auto idx = pair_index(nn, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1));
        if (values[idx]) detail::bad_field(path, "duplicate pair");
        values[idx] = std::move(v);
    }
    std::vector<Rational> flat;
    flat.reserve(values.size());
    std::size_t idx = 0;
    for (const auto& [i, jj] : all_pairs(nn)) {
        if (!values[idx])
            throw Error(ErrorKind::InvalidCouplings,
                        "missing coupling for pair {" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + "}");
        flat.push_back(*values[idx++]);
    }
    return CouplingSet(nn, std::move(flat));
}

inline Json to_json(const CouplingSet& c) {
    Json list = Json::array();
    std::size_t idx = 0;
    for (const auto& [i, j] : all_pairs(c.n()))
        list.push_back({{"i", i + 1}, {"j", j + 1}, {"value", c.values()[idx++].to_string()}});
    return {{"n", c.n()}, {"couplings", std::move(list)}};
}

/// A coordinate is {"r": "p/q", "t": "p/q", "n": int} for r + t sqrt(n), or
/// a bare rational.
inline QuadraticReal coordinate_from_json(const Json& v, const std::string& path) {
    if (!v.is_object()) return QuadraticReal(detail::rational_field(v, path));
    Rational r = v.contains("r") ? detail::rational_field(v["r"], path + ".r") : Rational(0);
    Rational t = v.contains("t") ? detail::rational_field(v["t"], path + ".t") : Rational(0);
    long long n = v.contains("n") ? detail::int_field(v["n"], path + ".n") : 1;
    if (n < 0) detail::bad_field(path + ".n", "radicand must be non-negative");
    return QuadraticReal(std::move(r), std::move(t), BigInt(n));
}

inline PointConfig points_from_json(const Json& j) {
    const long long dim = detail::int_field(detail::require(j, "dim", "$"), "$.dim");
    if (dim != 2 && dim != 3) detail::bad_field("$.dim", "must be 2 or 3");
    const Json& pts = detail::require(j, "points", "$");
    if (!pts.is_array()) detail::bad_field("$.points", "expected an array");
    std::vector<Point> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const std::string path = "$.points[" + std::to_string(k) + "]";
        if (!pts[k].is_array() || pts[k].size() != static_cast<std::size_t>(dim))
            detail::bad_field(path, "expected " + std::to_string(dim) + " coordinates");
        Point p;
        for (std::size_t c = 0; c < pts[k].size(); ++c)
            p.push_back(coordinate_from_json(pts[k][c], path + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(p));
    }
    return PointConfig(static_cast<std::size_t>(dim), std::move(out));
}

inline Json to_json(const QuadraticReal& q) {
    return {{"r", q.rational_part().to_string()}, {"t", q.coeff().to_string()}, {"n", q.radicand().convert_to<long long>()}};
}

inline Json to_json(const PointConfig& cfg) {
    Json pts = Json::array();
    for (const auto& p : cfg.points()) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(to_json(c));
        pts.push_back(std::move(row));
    }
    return {{"dim", cfg.dim()}, {"points", std::move(pts)}};
}

inline Json edges_json(const std::vector<Edge>& edges) {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    Json out = Json::array();
    for (const auto& [i, j] : sorted) out.push_back(Json::array({i + 1, j + 1}));
    return out;
}

inline Json to_json(const AdequacyReport& r) {
    Json j;
    j["adequate"] = r.adequate;
    j["base_coupling"] = optional_rational(r.base_coupling);
    j["time_t_in_units"] = optional_rational(r.time_t_in_units);
    j["thick_edges"] = r.thickness ? edges_json(r.thickness->thick_edges) : Json(nullptr);
    j["failure_reason"] = r.failure_reason == FailureReason::None ? Json(nullptr) : Json(std::string(to_string(r.failure_reason)));
    Json odd = Json::array();
    for (auto v : r.odd_vertices) odd.push_back(v + 1);
    j["odd_vertices"] = std::move(odd);
    return j;
}

inline Json to_json(const RealizationWitness& w) {
    return {{"realizable", w.realizable},
            {"t_times_J_over_pi", optional_rational(w.t_times_J_over_pi)},
            {"theta_over_pi", optional_rational(w.theta_over_pi)},
            {"coupling_unit", optional_rational(w.coupling_unit)}};
}

inline Json to_json(const CircuitCheck& c) {
    return {{"passed", c.passed},
            {"inputs_checked", c.inputs_checked},
            {"counterexample", c.counterexample ? Json(*c.counterexample) : Json(nullptr)}};
}

inline Json to_json(const UnIdentityReport& r) {
    return {{"u4_identity", r.u4_identity},
            {"u2_odd_identity", r.u2_odd_identity},
            {"cz_identity", r.cz_identity},
            {"un_from_two_parity", r.un_from_two_parity}};
}

inline Json to_json(const Amplitude& a) {
    Json c = Json::array();
    for (const auto& v : a.coeffs()) c.push_back(v.str());
    return {{"coeffs", std::move(c)}, {"half_powers", a.half_powers()}};
}

/// Nonzero amplitudes only, keyed by basis string.
inline Json to_json(const StateVector& s) {
    Json out = Json::array();
    for (std::size_t x = 0; x < s.dimension(); ++x) {
        if (s[x].is_zero()) continue;
        Json a = to_json(s[x]);
        out.push_back({{"basis", s.bits_of(x)}, {"coeffs", a["coeffs"]}, {"half_powers", a["half_powers"]}});
    }
    return out;
}

inline Json to_json(const RepresentativeColumn& c) {
    Json res;
    static const char* four[] = {"a", "c", "t", "u"};
    static const char* three[] = {"a", "t"};
    for (std::size_t i = 0; i < c.residues.size(); ++i)
        res[c.residues.size() == 4 ? four[i] : three[i]] = c.residues[i];
    return {{"case", std::string(to_string(c.which))},
            {"n_mod_16", c.n_mod_16},
            {"letter", std::string(1, c.letter)},
            {"column_label", c.column_label},
            {"residues", std::move(res)}};
}

inline Json to_json(const StandardPosition4& sp) {
    return {{"a", sp.a.to_string()},
            {"c", sp.c.to_string()},
            {"t", sp.t.to_string()},
            {"u", sp.u.to_string()},
            {"n", sp.n.str()},
            {"e_squared", sp.e_squared.to_string()},
            {"thick_pattern", std::string(to_string(sp.thick_pattern))},
            {"l1", sp.l1},
            {"l2", sp.l2}};
}

inline Json to_json(const U4Classification& c) {
    Json order = Json::array();
    for (auto v : c.order) order.push_back(v + 1);
    return {{"standard", to_json(c.standard)}, {"column", to_json(c.column)}, {"order", std::move(order)}};
}

inline Json to_json(const U3Result& r) {
    return {{"adequate", r.adequate},
            {"a", optional_rational(r.a)},
            {"t", optional_rational(r.t)},
            {"n", r.n ? Json(r.n->str()) : Json(nullptr)},
            {"column", r.column ? to_json(*r.column) : Json(nullptr)}};
}

inline Json to_json(const Search5Result& r) {
    Json found = Json::array();
    for (const auto& cfg : r.found) found.push_back(to_json(cfg));
    return {{"trials", r.trials},
            {"weak_bases", r.weak_bases},
            {"candidates_checked", r.candidates_checked},
            {"found", std::move(found)}};
}

inline Json to_json(const BuiltinConfig& b) {
    return {{"name", b.name},
            {"description", b.description},
            {"points", b.points ? to_json(*b.points) : Json(nullptr)},
            {"couplings", to_json(b.couplings)},
            {"expected_adequate", b.expected_adequate},
            {"expected_column", b.expected_column ? Json(*b.expected_column) : Json(nullptr)}};
}

}  // namespace fanout::io
