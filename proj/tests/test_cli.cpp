#include <gtest/gtest.h>

#include <sstream>

#include "fanout/cli.hpp"

using fanout::cli::Json;

namespace {

struct Result {
    int code = -1;
    Json report;
    std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    Result r;
    r.code = fanout::cli::run(args, out, err, in);
    r.report = Json::parse(out.str());
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(FANOUT_DATA_DIR) + "/" + name + ".json"; }

Json without_timing(Json j) {
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST(Cli, ReportEnvelope) {
    auto r = call({"check-adequacy", data("fig2-left")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["schema_version"], "1.0");
    EXPECT_EQ(r.report["subcommand"], "check-adequacy");
    EXPECT_TRUE(r.report["timing_ms"].is_number_integer());
    EXPECT_TRUE(r.report["verdict"]["adequate"].get<bool>());
    EXPECT_EQ(r.report["verdict"]["base_coupling"], "1/12");
    EXPECT_EQ(r.report["verdict"]["thick_edges"], Json::parse("[[1,3],[1,4],[3,4]]"));
    EXPECT_NE(r.err.find("check-adequacy:"), std::string::npos);
}

TEST(Cli, ExitCodesOnDataFiles) {
    for (const char* name : {"fig2-left", "fig2-right", "equilateral-3", "regular-tetrahedron", "elongated-tetrahedron",
                             "square-4", "cube-8", "octahedron-6"})
        EXPECT_EQ(call({"check-adequacy", data(name)}).code, 0) << name;
    EXPECT_EQ(call({"check-adequacy", data("unit-square")}).code, 1);
    EXPECT_EQ(call({"verify-hamiltonian", "--couplings", data("cube-8")}).code, 0);
    EXPECT_EQ(call({"classify", "--points", data("elongated-tetrahedron")}).code, 0);
    EXPECT_EQ(call({"classify", "--points", data("unit-square")}).code, 1);
    EXPECT_EQ(call({"check-u3", "--points", data("equilateral-3")}).code, 0);
}

TEST(Cli, CouplingsFromStdin) {
    const std::string in = R"({"n": 3, "couplings": [{"i": 1, "j": 2, "value": "3"},
                                                       {"i": 1, "j": 3, "value": 1},
                                                       {"i": 2, "j": 3, "value": "1"}]})";
    auto r = call({"check-adequacy", "-"}, in);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report["verdict"]["failure_reason"], "OddDegreeVertex");
    EXPECT_EQ(r.report["verdict"]["odd_vertices"], Json::parse("[1,2]"));
}

TEST(Cli, VerifyCircuit) {
    auto r = call({"verify-circuit", "--n", "3", "--fanout"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.report["verdict"]["parity"]["passed"].get<bool>());
    EXPECT_TRUE(r.report["verdict"]["fanout"]["passed"].get<bool>());

    auto t = call({"verify-circuit", "--n", "1", "--trace", "--input", "11"});
    EXPECT_EQ(t.code, 0);
    const auto& steps = t.report["verdict"]["trace"]["steps"];
    // Step 0 is the input state, then one entry per gate.
    ASSERT_EQ(steps.size(), 10U);
    EXPECT_EQ(steps.front()["state"][0]["basis"], "11");
    EXPECT_EQ(steps.back()["state"][0]["basis"], "10");

    EXPECT_EQ(call({"verify-circuit", "--n", "2", "--input", "01"}).code, 2);
    EXPECT_EQ(call({"verify-circuit", "--n", "3", "--identities"}).code, 1);
    EXPECT_EQ(call({"verify-circuit", "--n", "4", "--identities"}).code, 0);
}

TEST(Cli, Enumerate) {
    auto r = call({"enumerate", "--case", "planar3cycle", "--nmod16", "11"});
    EXPECT_EQ(r.code, 0);
    const auto& cols = r.report["verdict"]["columns"];
    ASSERT_EQ(cols.size(), 8U);
    EXPECT_EQ(cols[0]["letter"], "I");
    EXPECT_EQ(cols[7]["letter"], "P");
    EXPECT_EQ(call({"enumerate", "--case", "planar3cycle", "--nmod16", "5"}).code, 2);
    EXPECT_EQ(call({"enumerate", "--case", "pentagon", "--nmod16", "3"}).code, 2);
}

TEST(Cli, BuiltinRoundTrip) {
    auto names = call({"builtin"}).report["verdict"]["names"];
    ASSERT_GE(names.size(), 9U);
    for (const auto& n : names) {
        const std::string name = n.get<std::string>();
        auto b = call({"builtin", "--name", name});
        ASSERT_EQ(b.code, 0);
        const bool expected = b.report["verdict"]["expected_adequate"].get<bool>();
        auto r = call({"check-adequacy", "-"}, b.report.dump());
        EXPECT_EQ(r.code, expected ? 0 : 1) << name;
    }
}

TEST(Cli, DeterministicApartFromTiming) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"search5", "--trials", "200", "--seed", "7"},
                                                                   {"check-adequacy", data("cube-8")},
                                                                   {"classify", "--points", data("fig2-right")}}) {
        auto a = call(args), b = call(args);
        EXPECT_EQ(without_timing(a.report), without_timing(b.report));
    }
    auto quiet = call({"--quiet", "search5", "--trials", "200", "--seed", "7"});
    auto loud = call({"search5", "--trials", "200", "--seed", "7"});
    EXPECT_TRUE(quiet.err.empty());
    EXPECT_EQ(without_timing(quiet.report), without_timing(loud.report));
}

TEST(Cli, MalformedFieldIsReported) {
    const std::string in = R"({"n": 2, "couplings": [{"i": 1, "j": 2, "value": "one"}]})";
    auto r = call({"check-adequacy"}, in);
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.report["verdict"]["error"]["kind"], "ParseError");
    EXPECT_NE(r.report["verdict"]["error"]["message"].get<std::string>().find("$.couplings[0].value"),
              std::string::npos);
    EXPECT_EQ(r.report["schema_version"], "1.0");

    auto missing = call({"check-adequacy"}, R"({"n": 3, "couplings": [{"i": 1, "j": 2, "value": 1}]})");
    EXPECT_EQ(missing.code, 2);
    EXPECT_EQ(missing.report["verdict"]["error"]["kind"], "InvalidCouplings");

    auto junk = call({"check-adequacy"}, "{not json");
    EXPECT_EQ(junk.code, 2);
    EXPECT_EQ(junk.report["verdict"]["error"]["kind"], "ParseError");
}

TEST(Cli, UsageErrors) {
    auto r = call({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.report["verdict"]["error"]["kind"], "Usage");
    EXPECT_EQ(r.report["schema_version"], "1.0");
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"classify", "--points", data("equilateral-3")}).code, 2);
}

TEST(Cli, SchemaAndHelp) {
    std::ostringstream out, err;
    std::istringstream in;
    EXPECT_EQ(fanout::cli::run({"--json-schema"}, out, err, in), 0);
    auto schema = Json::parse(out.str());
    EXPECT_TRUE(schema.contains("properties"));
    std::ostringstream hout;
    EXPECT_EQ(fanout::cli::run({"--help"}, hout, err, in), 0);
    EXPECT_NE(hout.str().find("check-adequacy"), std::string::npos);
}
