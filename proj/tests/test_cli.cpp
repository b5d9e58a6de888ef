#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monogamy/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using monogamy::run_command;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_command(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type pos = 0;
    while (pos < text.size()) {
        std::string::size_type nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::string::size_type pos = 0;
    while (true) {
        std::string::size_type comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

}  // namespace

TEST_CASE("eval reports the second worked example within rounding of its decimals") {
    RunResult r = run({"eval", "--gsd", "0.4714045,0.4714045,0.4714045,0.4082483,0.4082483",
                       "--beta", "4", "--k", "0.8", "--measure", "negativity"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "eval");
    CHECK(doc["measure"] == "negativity");
    CHECK(doc["state"]["source"] == "gsd");
    double ab = doc["measures"]["numeric"]["ab"].get<double>();
    double ac = doc["measures"]["numeric"]["ac"].get<double>();
    double total = doc["measures"]["numeric"]["total"].get<double>();
    CHECK(ab == doctest::Approx(0.44444).epsilon(1e-4));
    CHECK(ac == doctest::Approx(0.38490).epsilon(1e-4));
    CHECK(total == doctest::Approx(0.70273).epsilon(1e-4));
    CHECK(doc["bounds"].contains("new"));
    CHECK(doc["bounds"]["new"]["conditions_ok"].get<bool>());
}

TEST_CASE("eval of a product state reports zeros everywhere") {
    RunResult r = run({"eval", "--gsd", "1,0,0,0,0", "--beta", "4", "--k", "1"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"ab", "ac", "total"}) {
        CHECK(doc["measures"]["analytic"][key].get<double>() == 0.0);
        CHECK(doc["measures"]["numeric"][key].get<double>() == 0.0);
    }
    CHECK(doc["truth_power"].get<double>() == 0.0);
    for (const auto& [name, bound] : doc["bounds"].items()) {
        INFO(name);
        CHECK(bound["value"].get<double>() == 0.0);
    }
}

TEST_CASE("eval reports what the state actually is, phase included") {
    RunResult r = run({"eval", "--gsd", "0.5,0,0.70710678,0.5,0", "--beta", "4", "--k", "0.8"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    double ab = doc["measures"]["numeric"]["ab"].get<double>();
    double ac = doc["measures"]["numeric"]["ac"].get<double>();
    double total = doc["measures"]["numeric"]["total"].get<double>();
    CHECK(ab == doctest::Approx(std::sqrt(0.5)).epsilon(1e-7));
    CHECK(ac == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(total == doctest::Approx(std::sqrt(0.75)).epsilon(1e-7));
    // analytic and numeric agree to much tighter tolerance
    CHECK(doc["measures"]["analytic"]["ab"].get<double>() == doctest::Approx(ab).epsilon(1e-9));
    CHECK(doc["measures"]["analytic"]["ac"].get<double>() == doctest::Approx(ac).epsilon(1e-9));
    CHECK(doc["measures"]["analytic"]["total"].get<double>() ==
          doctest::Approx(total).epsilon(1e-9));
    CHECK(doc["bounds"]["new"]["conditions_ok"].get<bool>());
}

TEST_CASE("eval output is byte-stable with a fixed key order") {
    std::vector<std::string> args = {"eval", "--gsd", "0.5,0,0.70710678,0.5,0",
                                     "--beta", "4", "--k", "0.8"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("{\n  \"schema_version\": \"1\",\n  \"command\": \"eval\",", 0) == 0);
    CHECK(a.out.back() == '\n');
}

TEST_CASE("eval rejects malformed input with exit 2") {
    CHECK(run({"eval", "--gsd", "0.5,0.2"}).code == 2);
    CHECK(run({"eval", "--gsd", "0.9,0.9,0,0,0"}).code == 2);
    CHECK(run({"eval", "--gsd", "a,b,c,d,e"}).code == 2);
    CHECK(run({"eval", "--beta", "4"}).code == 2);
    CHECK(run({"eval", "--gsd", "1,0,0,0,0", "--measure", "fidelity"}).code == 2);
    CHECK(run({"eval", "--gsd", "1,0,0,0,0", "--family", "new", "--beta", "3"}).code == 2);
    RunResult missing = run({"eval"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("state source") != std::string::npos);
}

TEST_CASE("reproduce emits the pinned curves") {
    RunResult r = run({"reproduce", "fig1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() == 162);  // header + 161 rows
    CHECK(lines[0] == "beta,ylm,fei,tao,new,truth");
    std::vector<std::string> first = fields_of(lines[1]);
    REQUIRE(first.size() == 6);
    CHECK(std::stod(first[0]) == 4.0);
    CHECK(std::stod(first[1]) == doctest::Approx(0.1171875).epsilon(1e-11));
    CHECK(std::stod(first[2]) == doctest::Approx(0.109375).epsilon(1e-11));
    CHECK(std::stod(first[3]) == doctest::Approx(0.12109375).epsilon(1e-11));
    CHECK(std::stod(first[4]) == doctest::Approx(0.12328125).epsilon(1e-11));
    CHECK(std::stod(first[5]) == doctest::Approx(0.25).epsilon(1e-11));
}

TEST_CASE("reproduce fig2 with k = 1 collapses tao onto new") {
    RunResult r = run({"reproduce", "fig2", "--k", "1"});
    REQUIRE(r.code == 0);
    std::vector<std::string> lines = lines_of(r.out);
    REQUIRE(lines.size() > 2);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> f = fields_of(lines[i]);
        REQUIRE(f.size() == 6);
        CHECK(f[3] == f[4]);  // identical doubles format identically
    }
}

TEST_CASE("reproduce handles grids and bad input") {
    RunResult single = run({"reproduce", "fig1", "--beta-min", "4", "--beta-max", "4",
                            "--step", "1"});
    CHECK(single.code == 0);
    CHECK(lines_of(single.out).size() == 2);
    CHECK(run({"reproduce", "fig3"}).code == 2);
    CHECK(run({"reproduce", "fig1", "--beta-min", "5", "--beta-max", "4", "--step", "1"}).code ==
          2);
    CHECK(run({"reproduce"}).code == 2);
}

TEST_CASE("sweep over a measured state matches the pinned first-figure curve") {
    RunResult swept = run({"sweep", "--gsd", "0.5,0.5,0.5,0.353553390593,0.353553390593",
                           "--beta-min", "4", "--beta-max", "6", "--step", "1", "--k", "0.8"});
    REQUIRE(swept.code == 0);
    RunResult pinned = run({"reproduce", "fig1", "--beta-min", "4", "--beta-max", "6",
                            "--step", "1"});
    REQUIRE(pinned.code == 0);
    std::vector<std::string> got = lines_of(swept.out);
    std::vector<std::string> want = lines_of(pinned.out);
    REQUIRE(got.size() == want.size());
    CHECK(got[0] == want[0]);
    for (std::size_t i = 1; i < got.size(); ++i) {
        std::vector<std::string> g = fields_of(got[i]);
        std::vector<std::string> w = fields_of(want[i]);
        REQUIRE(g.size() == 6);
        for (std::size_t c = 0; c < 6; ++c)
            CHECK(std::stod(g[c]) == doctest::Approx(std::stod(w[c])).epsilon(1e-9));
    }
}

TEST_CASE("sweep input handling") {
    RunResult collapse = run({"sweep", "--gsd", "0.5,0.5,0.5,0.353553390593,0.353553390593",
                              "--beta-min", "4", "--beta-max", "5", "--step", "0.5",
                              "--k", "1"});
    REQUIRE(collapse.code == 0);
    std::vector<std::string> lines = lines_of(collapse.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> f = fields_of(lines[i]);
        CHECK(f[3] == f[4]);
    }
    CHECK(run({"sweep", "--gsd", "1,0,0,0,0", "--beta-min", "5", "--beta-max", "4",
               "--step", "1"}).code == 2);
    CHECK(run({"sweep"}).code == 2);
}

TEST_CASE("campaign commands succeed and report structured results") {
    RunResult ckw = run({"campaign", "--kind", "ckw", "--samples", "50", "--seed", "7"});
    REQUIRE(ckw.code == 0);
    auto doc = nlohmann::json::parse(ckw.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "campaign");
    CHECK(doc["kind"] == "ckw");
    CHECK(doc["config"]["seed"].get<std::uint64_t>() == 7);
    CHECK(doc["config"]["samples"].get<long>() == 50);
    CHECK(doc["result"]["checked"].get<long>() == 50);
    CHECK(doc["result"]["violations"].get<long>() == 0);
    CHECK(doc["result"]["worst_case"]["inputs"].size() == 16);

    RunResult lemma = run({"campaign", "--kind", "lemma", "--beta-min", "2", "--beta-max", "3",
                           "--step", "0.5", "--k-min", "0.5", "--k-max", "1", "--k-step", "0.25"});
    REQUIRE(lemma.code == 0);
    auto lemma_doc = nlohmann::json::parse(lemma.out);
    CHECK(lemma_doc["result"]["violations"].get<long>() == 0);
    CHECK(lemma_doc["result"]["checked"].get<long>() == 3 * 3 * 101);
    CHECK(lemma_doc["result"]["worst_case"]["inputs"].contains("t"));
    CHECK(lemma_doc["result"]["worst_case"]["inputs"].contains("k"));
    CHECK(lemma_doc["result"]["worst_case"]["inputs"].contains("x"));

    RunResult validity = run({"campaign", "--kind", "validity", "--samples", "50",
                              "--family", "tao"});
    REQUIRE(validity.code == 0);
    CHECK(nlohmann::json::parse(validity.out)["family"] == "tao");

    RunResult dominance = run({"campaign", "--kind", "dominance", "--samples", "50",
                               "--seed", "3"});
    CHECK(dominance.code == 0);

    CHECK(run({"campaign", "--kind", "bogus"}).code == 2);
    CHECK(run({"campaign"}).code == 2);
}

TEST_CASE("campaign exits 1 when violations are counted") {
    // Exploratory scan below the x >= 2 hypothesis: the gap goes negative.
    RunResult r = run({"campaign", "--kind", "lemma", "--exploratory", "--beta-min", "1.2",
                       "--beta-max", "1.2", "--step", "1", "--k-min", "0.9", "--k-max", "0.9",
                       "--k-step", "0.1"});
    CHECK(r.code == 1);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["violations"].get<long>() > 0);
    CHECK(doc["result"]["min_slack"].get<double>() < 0.0);

    // Same grid without --exploratory is a usage error, not a violation.
    CHECK(run({"campaign", "--kind", "lemma", "--beta-min", "1.2", "--beta-max", "1.2",
               "--step", "1", "--k-min", "0.9", "--k-max", "0.9", "--k-step", "0.1"})
              .code == 2);
}

TEST_CASE("campaign output is byte-stable for a fixed seed") {
    std::vector<std::string> args = {"campaign", "--kind", "ckw", "--samples", "40",
                                     "--seed", "11"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("output redirection writes the same bytes to a file") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "monogamy_cli_test_fig1.csv";
    RunResult direct = run({"reproduce", "fig1", "--beta-min", "4", "--beta-max", "5",
                            "--step", "0.5"});
    RunResult redirected = run({"reproduce", "fig1", "--beta-min", "4", "--beta-max", "5",
                                "--step", "0.5", "--out", path.string()});
    REQUIRE(redirected.code == 0);
    CHECK(redirected.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    in.close();
    fs::remove(path);
}

TEST_CASE("amplitude files drive the eval pipeline") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "monogamy_cli_test_state.txt";
    {
        std::ofstream f(path);
        f << "# GHZ state\n";
        f << "0.70710678118654752 0\n";
        for (int i = 0; i < 6; ++i) f << "0 0\n";
        f << "0.70710678118654752 0\n";
    }
    RunResult r = run({"eval", "--amplitudes", path.string(), "--beta", "4", "--k", "1"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK_FALSE(doc["measures"].contains("analytic"));
    CHECK(doc["state"]["num_qubits"].get<int>() == 3);
    CHECK(doc["measures"]["numeric"]["ab"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(doc["measures"]["numeric"]["total"].get<double>() ==
          doctest::Approx(1.0).epsilon(1e-9));
    fs::remove(path);

    CHECK(run({"eval", "--amplitudes", "/nonexistent/state.txt"}).code == 2);
    CHECK(run({"eval", "--gsd", "1,0,0,0,0", "--amplitudes", "x.txt"}).code == 2);
}

TEST_CASE("help and dispatch") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("eval") != std::string::npos);
    CHECK(help.out.find("reproduce") != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}
