#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanout/io.hpp"

namespace fanout::cli {

using io::Json;

inline constexpr const char* kSchemaVersion = "1.0";

namespace exit_code {
inline constexpr int passed = 0;
inline constexpr int failed = 1;
inline constexpr int error = 2;
}  // namespace exit_code

/// What a subcommand hands back: the verdict payload, its exit code and a
/// one-line human summary.
struct Outcome {
    int code = exit_code::passed;
    Json verdict;
    std::string summary;
};

inline Json report_schema() {
    return Json::parse(R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "fanout report",
  "type": "object",
  "required": ["schema_version", "subcommand", "verdict", "timing_ms"],
  "properties": {
    "schema_version": {"type": "string"},
    "subcommand": {"type": "string", "enum": ["check-adequacy", "verify-hamiltonian", "verify-circuit", "classify",
                                             "check-u3", "enumerate", "search5", "builtin", ""]},
    "verdict": {
      "type": "object",
      "description": "Subcommand payload. Rationals are strings; on exit code 2 it holds {\"error\": {\"kind\", \"message\"}}."
    },
    "timing_ms": {"type": "integer", "minimum": 0}
  },
  "additionalProperties": false
})");
}

namespace detail {

inline Json read_json(const std::string& path, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

/// Unwraps the output of `builtin --name X` to its point or coupling payload.
inline const Json& unwrap_builtin(const Json& j) {
    if (j.is_object() && j.contains("subcommand") && j["subcommand"] == "builtin" && j.contains("verdict")) {
        const Json& v = j["verdict"];
        if (v.contains("points") && !v["points"].is_null()) return v["points"];
        if (v.contains("couplings")) return v["couplings"];
        throw Error(ErrorKind::ParseError, "field '$.verdict': builtin report without points or couplings");
    }
    return j;
}

inline PointConfig read_points(const std::string& path, std::istream& in) {
    Json j = read_json(path, in);
    return io::points_from_json(unwrap_builtin(j));
}

inline CouplingSet read_couplings(const std::string& path, std::istream& in) {
    Json j = read_json(path, in);
    const Json& body = unwrap_builtin(j);
    if (body.is_object() && body.contains("points")) return couplings_from_points(io::points_from_json(body));
    return io::couplings_from_json(body);
}

inline std::string thick_summary(const AdequacyReport& r) {
    if (!r.thickness) return "";
    std::string s;
    for (const auto& e : io::edges_json(r.thickness->thick_edges)) {
        s += s.empty() ? "" : " ";
        s += "{" + std::to_string(e[0].get<int>()) + "," + std::to_string(e[1].get<int>()) + "}";
    }
    return s.empty() ? "none" : s;
}

inline Outcome adequacy_outcome(const AdequacyReport& r, const std::string& source) {
    Outcome o;
    o.verdict = io::to_json(r);
    o.verdict["source"] = source;
    o.code = r.adequate ? exit_code::passed : exit_code::failed;
    if (r.adequate)
        o.summary = "adequate: J = " + r.base_coupling->to_string() + ", thick edges " + thick_summary(r);
    else
        o.summary = "not adequate (" + std::string(to_string(r.failure_reason)) + ")";
    return o;
}

}  // namespace detail

inline Outcome cmd_check_adequacy(const std::string& path, std::istream& in) {
    Json j = detail::read_json(path, in);
    const Json& body = detail::unwrap_builtin(j);
    if (body.is_object() && body.contains("points"))
        return detail::adequacy_outcome(check_isq_adequacy(io::points_from_json(body)), "points");
    if (body.is_object() && body.contains("couplings"))
        return detail::adequacy_outcome(check_adequacy(io::couplings_from_json(body)), "couplings");
    throw Error(ErrorKind::ParseError, "field '$': expected 'couplings' or 'points'");
}

inline Outcome cmd_verify_hamiltonian(const std::string& path, std::istream& in) {
    RealizationWitness w = verify_un_realization(detail::read_couplings(path, in));
    Outcome o;
    o.verdict = io::to_json(w);
    o.code = w.realizable ? exit_code::passed : exit_code::failed;
    o.summary = w.realizable ? "realizes U_n: tJ/pi = " + w.t_times_J_over_pi->to_string() + ", theta/pi = " +
                                   w.theta_over_pi->to_string()
                             : "no evolution time realizes U_n";
    return o;
}

struct CircuitOptions {
    std::size_t n = 1;
    bool fanout = false;
    bool identities = false;
    bool trace = false;
    bool up_to_phase = false;
    std::string input;
};

inline Outcome cmd_verify_circuit(const CircuitOptions& opt) {
    Outcome o;
    bool ok = true;
    o.verdict["n"] = opt.n;
    CircuitCheck parity = check_parity(opt.n, opt.up_to_phase);
    o.verdict["parity"] = io::to_json(parity);
    ok = ok && parity.passed;
    o.summary = std::string("parity ") + (parity.passed ? "ok" : "FAILED");
    if (opt.fanout) {
        CircuitCheck f = check_fanout(opt.n, opt.up_to_phase);
        o.verdict["fanout"] = io::to_json(f);
        ok = ok && f.passed;
        o.summary += std::string(", fanout ") + (f.passed ? "ok" : "FAILED");
    }
    if (opt.identities) {
        UnIdentityReport r = verify_un_identities(opt.n);
        o.verdict["identities"] = io::to_json(r);
        bool all = r.u4_identity && r.u2_odd_identity && r.cz_identity && r.un_from_two_parity;
        ok = ok && all;
        o.summary += std::string(", identities ") + (all ? "ok" : "FAILED");
    }
    if (opt.trace) {
        Circuit c = build_cn(opt.n);
        std::string input = opt.input.empty() ? std::string(opt.n + 1, '0') : opt.input;
        Json steps = Json::array();
        steps.push_back({{"step", 0}, {"gate", nullptr}, {"state", io::to_json(StateVector::basis(input))}});
        simulate(c, input, [&](std::size_t i, const Gate& g, const StateVector& s) {
            steps.push_back({{"step", i + 1}, {"gate", g.to_string()}, {"state", io::to_json(s)}});
        });
        o.verdict["trace"] = {{"input", input}, {"steps", std::move(steps)}};
    } else if (!opt.input.empty()) {
        throw Error(ErrorKind::BadInput, "--input is only used together with --trace");
    }
    o.verdict["passed"] = ok;
    o.code = ok ? exit_code::passed : exit_code::failed;
    return o;
}

inline Outcome cmd_classify(const std::string& path, std::istream& in) {
    PointConfig cfg = detail::read_points(path, in);
    if (cfg.size() != 4) throw Error(ErrorKind::Precondition, "classify expects 4 points; use check-u3 for 3");
    AdequacyReport rep = check_isq_adequacy(cfg);
    Outcome o;
    o.verdict["adequacy"] = io::to_json(rep);
    if (!rep.adequate) {
        o.verdict["classification"] = nullptr;
        o.code = exit_code::failed;
        o.summary = "not isq-adequate for U_4 (" + std::string(to_string(rep.failure_reason)) + ")";
        return o;
    }
    U4Classification c = classify_u4(cfg);
    o.verdict["classification"] = io::to_json(c);
    o.summary = "column " + c.column.column_label + " (type " + std::string(1, c.column.letter) + "), " +
                std::string(to_string(c.standard.thick_pattern));
    return o;
}

inline Outcome cmd_check_u3(const std::string& path, std::istream& in) {
    U3Result r = check_u3(detail::read_points(path, in));
    Outcome o;
    o.verdict = io::to_json(r);
    o.code = r.adequate ? exit_code::passed : exit_code::failed;
    o.summary = r.adequate ? "isq-adequate for U_3, column " + r.column->column_label : "not isq-adequate for U_3";
    return o;
}

inline Outcome cmd_enumerate(const std::string& which, int n_mod_16) {
    SolutionCase c = parse_solution_case(which);
    auto cols = enumerate_representatives(c, n_mod_16);
    Outcome o;
    Json list = Json::array();
    for (const auto& col : cols) list.push_back(io::to_json(col));
    o.verdict = {{"case", std::string(to_string(c))}, {"n_mod_16", n_mod_16}, {"columns", std::move(list)}};
    o.summary = std::to_string(cols.size()) + " representative columns";
    return o;
}

inline Outcome cmd_search5(std::size_t trials, std::uint64_t seed) {
    Search5Result r = search_5point(trials, seed);
    Outcome o;
    o.verdict = io::to_json(r);
    o.verdict["seed"] = seed;
    o.code = r.found.empty() ? exit_code::passed : exit_code::failed;
    o.summary = std::to_string(r.candidates_checked) + " five-point candidates checked, " +
                std::to_string(r.found.size()) + " weakly adequate";
    return o;
}

inline Outcome cmd_builtin(const std::string& name) {
    Outcome o;
    if (name.empty()) {
        Json names = Json::array();
        for (const auto& [k, v] : builtin_configs()) names.push_back(k);
        o.verdict = {{"names", std::move(names)}};
        o.summary = std::to_string(o.verdict["names"].size()) + " builtin configurations";
        return o;
    }
    BuiltinConfig b = builtin_config(name);
    o.verdict = io::to_json(b);
    o.summary = b.name + ": " + b.description;
    return o;
}

/// Parses `args` (without the program name), runs one subcommand, prints the
/// report to `out` and the summary to `err`. Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::istream& in = std::cin) {
    CLI::App app{"Exact verification of fanout-equivalent Ising couplings and circuits", "fanout"};
    bool quiet = false;
    bool schema = false;
    app.add_flag("--quiet", quiet, "suppress the human summary on stderr");
    app.add_flag("--json-schema", schema, "print the report JSON schema and exit");
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string path;
    auto* adequacy = app.add_subcommand("check-adequacy", "decide adequacy of couplings or points");
    adequacy->add_option("input", path, "JSON file, or - for stdin")->default_str("-");

    auto* hamiltonian = app.add_subcommand("verify-hamiltonian", "brute-force check that exp(-itH) equals U_n");
    hamiltonian->add_option("--couplings", path, "coupling JSON file, or - for stdin")->required();

    CircuitOptions copt;
    auto* circuit = app.add_subcommand("verify-circuit", "simulate the parity circuit exactly");
    circuit->add_option("--n", copt.n, "number of data qubits")->required()->check(CLI::PositiveNumber);
    circuit->add_flag("--fanout", copt.fanout, "also check the fanout circuit");
    circuit->add_flag("--identities", copt.identities, "also check the U_n identities");
    circuit->add_flag("--trace", copt.trace, "dump the state after every gate");
    circuit->add_option("--input", copt.input, "basis input for --trace, qubit 0 first");
    circuit->add_flag("--up-to-phase", copt.up_to_phase, "accept a global phase");

    auto* classify = app.add_subcommand("classify", "standard position and table column of 4 points");
    classify->add_option("--points", path, "point JSON file, or - for stdin")->required();

    auto* u3 = app.add_subcommand("check-u3", "isq-adequacy of 3 points for U_3");
    u3->add_option("--points", path, "point JSON file, or - for stdin")->required();

    std::string which;
    int nmod16 = 3;
    auto* enumerate = app.add_subcommand("enumerate", "list representative solution columns");
    enumerate->add_option("--case", which, "planar3cycle, allthin, fourcycle or u3")->required();
    enumerate->add_option("--nmod16", nmod16, "3 or 11")->required();

    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    auto* search = app.add_subcommand("search5", "seeded search for weakly adequate 5-point sets");
    search->add_option("--trials", trials, "number of trials")->default_val(10000);
    search->add_option("--seed", seed, "generator seed")->default_val(42);

    std::string name;
    auto* builtin = app.add_subcommand("builtin", "print a named exhibit, or list them");
    builtin->add_option("--name", name, "exhibit name");

    std::string subcommand;
    const auto start = std::chrono::steady_clock::now();
    auto emit = [&](const Outcome& o) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        Json report = {{"schema_version", kSchemaVersion},
                       {"subcommand", subcommand},
                       {"verdict", o.verdict},
                       {"timing_ms", ms.count()}};
        out << report.dump(2) << '\n';
        if (!quiet && !o.summary.empty()) err << (subcommand.empty() ? "fanout" : subcommand) << ": " << o.summary << '\n';
        return o.code;
    };
    auto fail = [&](std::string_view kind, const std::string& message) {
        Outcome o;
        o.code = exit_code::error;
        o.verdict = {{"error", {{"kind", kind}, {"message", message}}}};
        o.summary = "error: " + message;
        return emit(o);
    };

    std::vector<const char*> argv{"fanout"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::passed;
    } catch (const CLI::ParseError& e) {
        for (auto* sub : app.get_subcommands()) subcommand = sub->get_name();
        return fail("Usage", e.what());
    }

    if (schema) {
        out << report_schema().dump(2) << '\n';
        return exit_code::passed;
    }
    if (app.get_subcommands().empty()) return fail("Usage", "a subcommand is required; see --help");
    subcommand = app.get_subcommands().front()->get_name();

    try {
        if (subcommand == "check-adequacy") return emit(cmd_check_adequacy(path, in));
        if (subcommand == "verify-hamiltonian") return emit(cmd_verify_hamiltonian(path, in));
        if (subcommand == "verify-circuit") return emit(cmd_verify_circuit(copt));
        if (subcommand == "classify") return emit(cmd_classify(path, in));
        if (subcommand == "check-u3") return emit(cmd_check_u3(path, in));
        if (subcommand == "enumerate") return emit(cmd_enumerate(which, nmod16));
        if (subcommand == "search5") return emit(cmd_search5(trials, seed));
        if (subcommand == "builtin") return emit(cmd_builtin(name));
    } catch (const Error& e) {
        return fail(to_string(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail("ParseError", e.what());
    }
    return fail("Usage", "unknown subcommand");
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}

}  // namespace fanout::cli
