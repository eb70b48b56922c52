#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pivot_buffon/cli.hpp"

using namespace pivot_buffon::cli;
using nlohmann::json;
using std::numbers::pi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "pivot-buffon");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("exact for a symmetric needle") {
    const auto r = invoke({"exact", "--a", "0.5", "--b", "0.5", "--d", "1"});
    REQUIRE(r.code == kExitSuccess);
    const auto doc = json::parse(r.out);
    CHECK(doc["params"]["a"] == 0.5);
    const auto& exact = doc["exact"];
    CHECK(exact["source"] == "exact");
    CHECK(std::abs(exact["p1"].get<double>() - 4 / (pi * pi)) < 1e-15);
    CHECK(exact["k_squared"] == 1.0);
    CHECK(exact["E_k"] == 1.0);
    CHECK(std::abs(exact["mean_chord"].get<double>() - 2 / pi) < 1e-15);
    CHECK(std::abs(exact["expected_intersections"].get<double>() - 2 / pi) < 1e-15);
}

TEST_CASE("exact renders 17 significant digits") {
    const auto r = invoke({"exact", "--a", "0.5", "--b", "0.5", "--d", "1"});
    // %.17g, not the shortest round-trip form 0.6366197723675814
    CHECK(r.out.find("\"mean_chord\": 0.63661977236758138,") != std::string::npos);
    CHECK(r.out.find("\"a\": 0.5,") != std::string::npos);
    CHECK(r.out.find("\"d\": 1\n") != std::string::npos);
}

TEST_CASE("exact for the classical needle") {
    const auto doc = json::parse(invoke({"exact", "--a", "0.5", "--b", "0", "--d", "1"}).out);
    CHECK(doc["exact"]["p2"] == 0.0);
    CHECK(std::abs(doc["exact"]["p_union"].get<double>() - 1 / pi) < 1e-15);
}

TEST_CASE("exact with a fixed opening angle") {
    const auto doc =
        json::parse(invoke({"exact", "--a", "0.5", "--b", "0.5", "--d", "1", "--phi", "1.5707963267948966"}).out);
    CHECK(doc["exact"]["source"] == "fixed_angle_exact");
    CHECK(std::abs(doc["exact"]["p1"].get<double>() - std::sqrt(2.0) / pi) < 1e-15);
    CHECK(doc["params"].contains("phi"));
}

TEST_CASE("exact as CSV") {
    const auto r = invoke({"exact", "--a", "0.3", "--b", "0.5", "--d", "1", "--format", "csv"});
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    const auto header = split(rows[0]);
    CHECK(header.front() == "params.a");
    CHECK(std::find(header.begin(), header.end(), "exact.p2") != header.end());
    CHECK(split(rows[1]).size() == header.size());
}

TEST_CASE("constraint and usage errors exit with 2 and print no data") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"exact", "--a", "0.6", "--b", "0.6", "--d", "1"},
             {"exact", "--a", "0.1", "--b", "0.1", "--d", "0"},
             {"exact", "--a", "0", "--b", "0", "--d", "1"},
             {"exact", "--a", "-0.1", "--b", "0.1", "--d", "1"},
             {"simulate", "--a", "0.6", "--b", "0.6", "--d", "1", "--n", "10", "--seed", "1"},
             {"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "0", "--seed", "1"},
             {"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "10", "--seed", "1",
              "--chunks", "0"},
             {"validate", "--a", "0.6", "--b", "0.6", "--d", "1", "--n", "10", "--seed", "1"},
             {"sweep", "--d", "1", "--total", "1.5", "--steps", "4"},
             {"sweep", "--d", "1", "--total", "1", "--steps", "0"},
             {"exact", "--a", "0.1", "--b", "0.1", "--d", "1", "--format", "xml"},
             {"bogus"},
             {}}) {
        const auto r = invoke(args);
        CHECK(r.code == kExitUsage);
        CHECK(r.out.empty());
    }
    const auto r = invoke({"exact", "--a", "0.6", "--b", "0.6", "--d", "1"});
    CHECK(r.err.find("a + b <= d") != std::string::npos);
}

TEST_CASE("simulate needs a seed") {
    unsetenv(kSeedEnvVar);
    const auto missing = invoke({"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "10"});
    CHECK(missing.code == kExitUsage);
    CHECK(missing.err.find(kSeedEnvVar) != std::string::npos);

    setenv(kSeedEnvVar, "42", 1);
    const auto from_env = invoke({"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "1000"});
    const auto explicit_seed =
        invoke({"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "1000", "--seed", "42"});
    CHECK(from_env.code == kExitSuccess);
    CHECK(from_env.out == explicit_seed.out);

    setenv(kSeedEnvVar, "not-a-number", 1);
    CHECK(invoke({"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "10"}).code == kExitUsage);
    unsetenv(kSeedEnvVar);
}

TEST_CASE("simulate output") {
    const auto r =
        invoke({"simulate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "100000", "--seed", "42"});
    REQUIRE(r.code == kExitSuccess);
    const auto doc = json::parse(r.out);
    CHECK(doc["params"]["seed"] == 42);
    CHECK(doc["params"]["n"] == 100000);
    CHECK_FALSE(doc["params"].contains("chunks"));
    const auto& counts = doc["estimate"]["counts"];
    CHECK(counts["c0"].get<std::uint64_t>() + counts["c1"].get<std::uint64_t>() +
              counts["c2"].get<std::uint64_t>() ==
          100000);
    CHECK(counts["c_other"] == 0);
    const auto& w = doc["estimate"]["wilson95"];
    CHECK(w["p1_lo"].get<double>() <= doc["estimate"]["p_hat"]["p1"].get<double>());
    CHECK(w["p1_hi"].get<double>() >= doc["estimate"]["p_hat"]["p1"].get<double>());
}

TEST_CASE("simulate is deterministic across runs and chunk counts") {
    std::vector<std::string> base{"simulate", "--a", "0.3", "--b", "0.5", "--d", "1",
                                  "--n", "300000", "--seed", "42"};
    const auto first = invoke(base);
    CHECK(invoke(base).out == first.out);
    for (const char* chunks : {"1", "2", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--chunks", chunks});
        CHECK(invoke(args).out == first.out);
        args.insert(args.end(), {"--format", "csv"});
        CHECK(invoke(args).code == kExitSuccess);
    }
}

TEST_CASE("simulate with a long needle warns and proceeds") {
    const auto r = invoke({"simulate", "--a", "1.5", "--b", "1", "--d", "1", "--n", "1000",
                           "--seed", "3", "--allow-long-needle"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(json::parse(r.out)["estimate"]["counts"]["c_other"].get<int>() > 0);
}

TEST_CASE("validate passes for correct formulas") {
    const auto r = invoke({"validate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "1000000",
                           "--seed", "42", "--chunks", "4"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.err == "PASS\n");
    const auto doc = json::parse(r.out);
    CHECK(doc["tests"]["verdict"] == "PASS");
    CHECK(doc["tests"]["chi_square"]["dof"] == 2);
    for (const auto& z : doc["tests"]["z"]) CHECK(std::abs(z.get<double>()) < 4);
}

TEST_CASE("validate detects a 5% error in p1") {
    const auto r = invoke({"validate", "--a", "0.3", "--b", "0.5", "--d", "1", "--n", "1000000",
                           "--seed", "42", "--chunks", "4", "--inject-p1-scale", "1.05"});
    CHECK(r.code == kExitValidationFailed);
    CHECK(r.err == "FAIL\n");
    const auto doc = json::parse(r.out);
    CHECK(doc["tests"]["verdict"] == "FAIL");
    CHECK(std::abs(doc["tests"]["z"]["p1"].get<double>()) > 4);
}

TEST_CASE("validate collapses the empty category of a single segment") {
    const auto r = invoke({"validate", "--a", "0.5", "--b", "0", "--d", "1", "--n", "1000000",
                           "--seed", "7", "--chunks", "4"});
    CHECK(r.code == kExitSuccess);
    const auto doc = json::parse(r.out);
    CHECK(doc["tests"]["chi_square"]["collapsed"] == true);
    CHECK(doc["tests"]["chi_square"]["dof"] == 1);
    CHECK(doc["estimate"]["counts"]["c2"] == 0);
}

TEST_CASE("validate with a fixed straight needle") {
    const auto r = invoke({"validate", "--a", "0.4", "--b", "0.4", "--d", "1", "--n", "200000",
                           "--seed", "11", "--phi", "3.141592653589793"});
    CHECK(r.code == kExitSuccess);
}

TEST_CASE("sweep") {
    const auto r = invoke({"sweep", "--d", "1", "--total", "0.8", "--steps", "10"});
    REQUIRE(r.code == kExitSuccess);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "r,a,b,p0,p1,p2,k_squared,E_k,mean_chord");

    auto cells = [&](std::size_t i) { return split(rows[i]); };
    // r = 0 and r = 1 swap the arms
    for (int c = 3; c <= 5; ++c) CHECK(std::stod(cells(1)[c]) == std::stod(cells(11)[c]));

    double best = -1;
    std::size_t best_row = 0;
    double previous_r = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double r_value = std::stod(cells(i)[0]);
        CHECK(r_value > previous_r);
        previous_r = r_value;
        const double p2 = std::stod(cells(i)[5]);
        if (p2 > best) {
            best = p2;
            best_row = i;
        }
    }
    CHECK(std::stod(cells(best_row)[0]) == 0.5);

    const auto exact = json::parse(invoke({"exact", "--a", "0.4", "--b", "0.4", "--d", "1"}).out);
    CHECK(std::stod(cells(6)[4]) == exact["exact"]["p1"].get<double>());
    CHECK(std::stod(cells(6)[5]) == exact["exact"]["p2"].get<double>());

    const auto as_json =
        json::parse(invoke({"sweep", "--d", "1", "--total", "0.8", "--steps", "4", "--format", "json"}).out);
    CHECK(as_json["sweep"].size() == 5);
    CHECK(as_json["params"]["steps"] == 4);
}

TEST_CASE("help exits cleanly") {
    const auto r = invoke({"--help"});
    CHECK(r.code == kExitSuccess);
    CHECK(r.out.find("simulate") != std::string::npos);
}
