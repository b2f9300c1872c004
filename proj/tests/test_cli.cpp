#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mz/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"misiurewicz"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = mz::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute emits the bundle and exits 0") {
    CliResult r = run({"compute", "--d", "3", "--m", "1", "--var", "a"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["misiurewicz"]["coefficients"] == Json::array({"-6", "-1"}));
}

TEST_CASE("compute reports the degree-17 polynomial for m = 3") {
    CliResult r = run({"compute", "--d", "3", "--m", "3", "--var", "a"});
    REQUIRE(r.code == 0);
    auto coeffs = r.json()["misiurewicz"]["coefficients"];
    CHECK(coeffs.size() == 18);
    CHECK(coeffs.back() == "8");
    CHECK(coeffs.front() == "-66119763456");
}

TEST_CASE("compute at d = 2 passes the identity checks") {
    CliResult r = run({"compute", "--d", "2", "--m", "1", "--var", "a"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["misiurewicz"]["coefficients"] == Json::array({"-1"}));
}

TEST_CASE("compute with a general period emits the factorable polynomial only") {
    CliResult r = run({"compute", "--d", "3", "--m", "1", "--n", "2", "--var", "a"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["n"] == 2);
    CHECK(j.contains("pre_misiurewicz"));
    CHECK_FALSE(j.contains("misiurewicz"));
}

TEST_CASE("polygon subcommand matches the known vertex lists") {
    CliResult r = run({"polygon", "--d", "3", "--m", "2", "--prime", "3", "--var", "b"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["vertices"].dump() == "[[0,8],[5,5],[6,6]]");

    CliResult r2 = run({"polygon", "--d", "5", "--m", "1", "--prime", "5", "--var", "b"});
    CHECK(r2.json()["vertices"].dump() == "[[0,4],[3,3]]");

    CliResult r3 = run({"polygon", "--d", "3", "--m", "3", "--prime", "3", "--var", "b"});
    CHECK(r3.json()["vertices"].dump() == "[[0,26],[17,17]]");
}

TEST_CASE("certify subcommand and exit codes") {
    CliResult r = run({"certify", "--d", "3", "--m", "3"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["verdict"] == "Irreducible");
    CHECK(j["method"] == "EisensteinPolygon");
    CHECK(j["prime"] == 3);
}

TEST_CASE("invalid parameters exit 2") {
    CHECK(run({"compute", "--d", "1", "--m", "1"}).code == 2);
    CHECK(run({"polygon", "--d", "3", "--m", "1", "--prime", "6"}).code == 2);
    CHECK(run({"compute", "--d", "3", "--m", "1", "--var", "z"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("orbit subcommand validates all roots at d = 3, m = 2") {
    CliResult r = run({"orbit", "--d", "3", "--m", "2"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["reports"].size() == 6); // deg G_2 = 6, q_1 constant
    for (const auto& rep : j["reports"]) CHECK(rep["status"] == "PASS");
}

TEST_CASE("orbit at m = 3 includes the q-factor roots landing on zero") {
    CliResult r = run({"orbit", "--d", "3", "--m", "3"});
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["reports"].size() == 20); // 17 misiurewicz roots + 3 q-factor roots
    int zero_landings = 0;
    for (const auto& rep : j["reports"]) {
        CHECK(rep["status"] == "PASS");
        if (rep["source"] == "q_factor") {
            CHECK(rep["landing_class"] == "zero-fixed");
            ++zero_landings;
        }
    }
    CHECK(zero_landings == 3);
}

TEST_CASE("a failing orbit report exits 6") {
    // no step gap can beat 1e-30 in double precision, so every report FAILs
    CliResult r = run({"orbit", "--d", "3", "--m", "1", "--tol", "1e-30"});
    CHECK(r.code == 6);
    Json j = r.json();
    CHECK(j["reports"][0]["status"] == "FAIL");
}

TEST_CASE("an Inconclusive certificate exits 5") {
    // the default mod-p budget is too small for this point
    CliResult r = run({"certify", "--d", "3", "--m", "4"});
    CHECK(r.code == 5);
    CHECK(r.json()["verdict"] == "Inconclusive");
}

TEST_CASE("sweep: tiny grid certifies and is deterministic") {
    CliResult r1 = run({"sweep", "--dmax", "3", "--mmax", "2", "--jobs", "2"});
    REQUIRE(r1.code == 0);
    Json j = r1.json();
    CHECK(j["results"].size() == 4);
    for (const auto& row : j["results"]) {
        CHECK(row["status"] == "ok");
        CHECK(row["verdict"] == "Irreducible");
    }
}

TEST_CASE("sweep marks deep composite points opt-in skipped") {
    CliResult r = run({"sweep", "--dmin", "4", "--dmax", "4", "--mmin", "3", "--mmax", "3"});
    CHECK(r.code == 0); // skipped points do not fail the run
    Json j = r.json();
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["status"] == "skipped-opt-in");
    CHECK(j["results"][0]["verdict"].is_null());
}

TEST_CASE("sweep timeout reports skipped-timeout, never silently drops") {
    CliResult r = run({"sweep", "--dmax", "3", "--mmax", "1", "--timeout", "0.000001"});
    CHECK(r.code == 0);
    Json j = r.json();
    for (const auto& row : j["results"]) CHECK(row["status"] == "skipped-timeout");
}

TEST_CASE("sweep verdicts do not depend on the worker count") {
    CliResult one = run({"sweep", "--dmax", "5", "--mmax", "2", "--jobs", "1"});
    CliResult two = run({"sweep", "--dmax", "5", "--mmax", "2", "--jobs", "2"});
    REQUIRE(one.code == 0);
    REQUIRE(two.code == 0);
    Json ja = one.json(), jb = two.json();
    for (auto* j : {&ja, &jb}) {
        for (auto& row : (*j)["results"]) row.erase("time_ms");
    }
    CHECK(ja["results"] == jb["results"]);
}

TEST_CASE("byte-identical reports for identical invocations") {
    for (auto args : {std::initializer_list<const char*>{"compute", "--d", "4", "--m", "2"},
                      {"polygon", "--d", "5", "--m", "2", "--prime", "5"},
                      {"certify", "--d", "5", "--m", "2"},
                      {"orbit", "--d", "3", "--m", "1"}}) {
        CliResult a = run(args);
        CliResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("--pretty is a rendering of the same report") {
    CliResult plain = run({"certify", "--d", "3", "--m", "1"});
    CliResult pretty = run({"certify", "--d", "3", "--m", "1", "--pretty"});
    CHECK(plain.json() == pretty.json());
    CHECK(pretty.out.find('\n') != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
    std::string path = "/tmp/mz_cli_test_out.json";
    CliResult direct = run({"polygon", "--d", "3", "--m", "2", "--prime", "3"});
    CliResult filed = run({"polygon", "--d", "3", "--m", "2", "--prime", "3", "--out",
                           path.c_str()});
    REQUIRE(filed.code == 0);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
}
