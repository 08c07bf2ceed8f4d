// Copyright 2026 The linmimo Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "linmimo/cli/commands.hpp"

using namespace linmimo;
using namespace linmimo::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "linmimo");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / "linmimo_cli_test";
    fs::create_directories(p);
    return p;
}

std::string write_temp(const std::string& name, const std::string& body) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << body;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_error(const Json& j, OutageConfig (*parse)(const Json&)) {
    try {
        parse(j);
    } catch (const ConfigError& e) {
        return e.where();
    }
    return "";
}

const fs::path kConfigs = fs::path(LINMIMO_SOURCE_DIR) / "configs";

}  // namespace

TEST_CASE("shipped figure configs equal the built-in presets", "[cli][figures]") {
    REQUIRE(figure_ids() == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
    for (int id : figure_ids()) {
        INFO("figure " << id);
        const fs::path p = kConfigs / ("fig" + std::to_string(id) + ".json");
        REQUIRE(fs::exists(p));
        CHECK(load_json_file(p.string()) == figure_config(id));
    }
    CHECK_THROWS_AS(figure_config(1), InvalidArgument);
}

TEST_CASE("every shipped config parses", "[cli][config]") {
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(kConfigs)) {
        if (entry.path().extension() != ".json") continue;
        INFO(entry.path());
        const Json j = load_json_file(entry.path().string());
        const std::string cmd = j.at("command");
        if (cmd == "outage") CHECK_NOTHROW(parse_outage_config(j));
        else if (cmd == "asymptotic") CHECK_NOTHROW(parse_asymptotic_config(j));
        else if (cmd == "dmt") CHECK_NOTHROW(parse_dmt_config(j));
        else if (cmd == "validate") CHECK_NOTHROW(parse_validate_config(j));
        else FAIL("unexpected command " << cmd);
        ++seen;
    }
    CHECK(seen >= 10);
}

TEST_CASE("config errors name the offending field", "[cli][config]") {
    const Json good = {{"m_tx", 2}, {"n_rx", 2}, {"scheme", "coded_across_antennas"}, {"receiver", "mmse"},
                       {"rate_bpcu", 1}, {"snr_db", {0, 10}}, {"trials", 100}};
    CHECK(config_error(good, parse_outage_config).empty());

    Json j = good;
    j["bogus"] = 1;
    CHECK(config_error(j, parse_outage_config) == "$.bogus");
    j = good;
    j.erase("trials");
    CHECK(config_error(j, parse_outage_config) == "$.trials");
    j = good;
    j["n_rx"] = 1;
    CHECK(config_error(j, parse_outage_config) == "$.n_rx");
    j = good;
    j["snr_db"] = {10, 0};
    CHECK(config_error(j, parse_outage_config) == "$.snr_db[1]");
    j = good;
    j["rate_bpcu"] = "fast";
    CHECK(config_error(j, parse_outage_config) == "$.rate_bpcu");
    j = good;
    j["receiver"] = "optimal";
    CHECK_FALSE(config_error(j, parse_outage_config).empty());

    const Json sweeps = {{"sweeps", {{{"m_tx", 2}, {"n_rx", 2}, {"curves", {{{"scheme", "optimal"}, {"receiver", "optimal"}, {"rate_bpcu", 1}, {"extra", 0}}}}}}},
                         {"snr_db", {0}}, {"trials", 10}};
    CHECK(config_error(sweeps, parse_outage_config) == "$.sweeps[0].curves[0].extra");

    CHECK_THROWS_AS(parse_asymptotic_config(Json{{"receiver", "mmse"}, {"m_tx", 2}, {"beta", 0.5}, {"n_rx", 4}, {"snr_db", {3}}}),
                    ConfigError);
    CHECK_THROWS_AS(parse_validate_config(Json{{"suite", {"nope"}}}), ConfigError);
    CHECK(parse_validate_config(Json{{"suite", "all"}}).suites == validate_suite_names());

    try {
        parse_json_text("{\n  \"a\": 1,\n  \"b\" 2\n}", "x.json");
        FAIL("expected a syntax error");
    } catch (const ConfigError& e) {
        CHECK(e.where() == "x.json:3:7");
    }
}

TEST_CASE("grids expand with rounding", "[cli][config]") {
    const Json j = {{"m_tx", 1}, {"n_rx", 1}, {"scheme", "optimal"}, {"receiver", "optimal"}, {"rate_bpcu", 1},
                    {"snr_db", {{"start", 0}, {"stop", 1}, {"step", 0.1}}}, {"trials", 10}};
    const OutageConfig c = parse_outage_config(j);
    REQUIRE(c.snr_db.size() == 11);
    CHECK(c.snr_db[3] == 0.3);
    CHECK(c.snr_db.back() == 1.0);
}

TEST_CASE("tables render CSV and JSON", "[cli][table]") {
    Table t({"name", "p", "x", "n"});
    t.add_row({text("a"), probability(1.234567e-5), real(0.1), integer(42)});
    t.add_row({text("b,c"), probability(0.0), real(NAN), blank()});
    CHECK(t.to_csv() == "name,p,x,n\na,1.23457e-05,0.1,42\n\"b,c\",0.00000e+00,nan,\n");
    const Json j = Json::parse(t.to_json());
    CHECK(j[0]["p"] == 1.23457e-05);
    CHECK(j[1]["x"].is_null());
    CHECK(j[1]["n"].is_null());
    CHECK_THROWS_AS(t.add_row({text("short")}), InvalidArgument);

    const CsvData d = parse_csv(t.to_csv());
    CHECK(d.rows.size() == 2);
    CHECK(d.rows[1][0] == "b,c");
    CHECK(d.column("x") == 2);
    CHECK(d.column("missing") == -1);
}

TEST_CASE("outage output is byte-identical across worker counts", "[cli][reproducibility]") {
    const std::string cfg = (kConfigs / "siso_outage.json").string();
    const Run one = run({"outage", "--config", cfg, "--workers", "1"});
    const Run three = run({"outage", "--config", cfg, "--workers", "3"});
    REQUIRE(one.code == 0);
    CHECK(one.out == three.out);
    CHECK(one.out.rfind("m_tx,n_rx,scheme,receiver,rate_bpcu,snr_db,p_hat,ci_low,ci_high,events,trials\n", 0) == 0);

    const Run reseeded = run({"outage", "--config", cfg, "--seed", "99"});
    CHECK(reseeded.out != one.out);
    const Run json = run({"outage", "--config", cfg, "--format", "json"});
    CHECK(Json::parse(json.out).size() == 3);
}

TEST_CASE("files, sidecar metadata and secondary tables", "[cli][output]") {
    const fs::path out = scratch_dir() / "fig7.csv";
    const Run r = run({"reproduce-figure", "7", "--trials", "500", "--out", out.string(), "--seed", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const Json meta = Json::parse(slurp(out.string() + ".meta.json"));
    CHECK(meta["command"] == "asymptotic");
    CHECK(meta["seed"] == 5);
    CHECK(meta.contains("version"));
    CHECK(meta.contains("wall_time_s"));
    CHECK(meta["config"]["cdf"][0]["trials"] == 500);
    const CsvData cdf = parse_csv(slurp(scratch_dir() / "fig7.cdf.csv"));
    CHECK(cdf.column("cdf_gaussian") >= 0);
    CHECK(cdf.rows.size() == 8 * 101);
}

TEST_CASE("asymptotic command reports unsupported points as error rows", "[cli]") {
    const std::string cfg = write_temp("zf_beta1.json", R"({"receivers": ["zf", "mmse"], "m_tx": [4], "beta": [1.0], "snr_db": [10]})");
    const Run r = run({"asymptotic", "--config", cfg});
    REQUIRE(r.code == 0);
    const CsvData d = parse_csv(r.out);
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0][d.column("error")] == "BetaOneUnsupported");
    CHECK(d.rows[1][d.column("error")].empty());
}

TEST_CASE("dmt command lists breakpoints and predictions", "[cli]") {
    const Run r = run({"dmt", "--config", (kConfigs / "dmt_4x4.json").string()});
    REQUIRE(r.code == 0);
    const CsvData d = parse_csv(r.out);
    int predictions = 0;
    for (const auto& row : d.rows)
        if (row[d.column("record")] == "prediction") {
            ++predictions;
            const int want[] = {16, 9, 4, 1};
            CHECK(std::stoi(row[d.column("d")]) == want[predictions - 1]);
        }
    CHECK(predictions == 4);
}

TEST_CASE("slope command", "[cli][slope]") {
    std::string csv = "snr_db,p_hat,trials\n";
    for (int db = 0; db <= 30; db += 5) csv += std::to_string(db) + "," + std::to_string(std::pow(10.0, -2.0 * db / 10.0)) + ",0\n";
    const std::string curve = write_temp("curve.csv", csv);
    const Run r = run({"slope", "--curve", curve, "--window", "5", "25"});
    REQUIRE(r.code == 0);
    const CsvData d = parse_csv(r.out);
    CHECK(std::stod(d.rows[0][d.column("slope")]) == Catch::Approx(2.0).epsilon(1e-3));

    const Run none = run({"slope", "--curve", curve, "--window", "26", "29"});
    CHECK(none.code == 1);
    CHECK(parse_csv(none.out).rows[0][parse_csv(none.out).column("error")] == "InsufficientPoints");
}

TEST_CASE("validate emits a JSON report", "[cli][validate]") {
    const Run r = run({"validate", "--suite", "fixed_points"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suites"][0]["suite"] == "fixed_points");
}

TEST_CASE("bad invocations fail with diagnostics", "[cli][errors]") {
    const Run missing = run({"outage"});
    CHECK(missing.code != 0);
    const std::string bad = write_temp("bad.json", R"({"m_tx": 2, "n_rx": 2, "r_grid": [0], "colour": 1})");
    const Run unknown = run({"dmt", "--config", bad});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("$.colour") != std::string::npos);
    const Run fig = run({"reproduce-figure", "9"});
    CHECK(fig.code == 2);
    const Run version = run({"--version"});
    CHECK(version.code == 0);
}
