#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    std::string cmd = std::string(CYCLEQUIV_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, buf.str()};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

} // namespace

TEST_CASE("cosets command and exit codes") {
    RunResult ok = run_cli("cosets --n 7 --q 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "{0}\n{1,2,4}\n{3,5,6}\n");

    CHECK(run_cli("cosets --n 6 --q 5").out == "{0}\n{1,5}\n{2,4}\n{3}\n");
    CHECK(run_cli("cosets --n 4 --q 2").exit_code == 2);
    CHECK(run_cli("cosets --n 7").exit_code == 1);           // usage
    CHECK(run_cli("nonsense").exit_code == 1);               // usage
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("equiv --help").exit_code == 0);
}

TEST_CASE("equiv command on the Hamming pair") {
    write_file("cli_left.json", R"({"n":7,"field":2,"cosets":[[1,2,4]]})");
    write_file("cli_right.json", R"({"n":7,"field":2,"cosets":[[3,5,6]]})");

    RunResult r = run_cli("equiv cli_left.json cli_right.json --format json --oracle");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["schema"] == 1);
    CHECK(report["status"] == "EquivalentVia");
    CHECK(report["witness_multiplier"] == 3);
    CHECK(report["candidates_checked"] == 3);
    CHECK(report["ci_certified"] == true);
    CHECK(report["oracle_agrees"] == true);
    CHECK(report["config"]["command"] == "equiv");

    RunResult same = run_cli("equiv cli_left.json cli_left.json --format json");
    json self = json::parse(same.out);
    CHECK(self["status"] == "EquivalentVia");
    CHECK(self["witness_multiplier"] == 1);

    CHECK(run_cli("equiv cli_left.json missing.json").exit_code == 2);
    std::remove("cli_left.json");
    std::remove("cli_right.json");
}

TEST_CASE("inconclusive on an uncertified order") {
    write_file("cli_a12.json", R"({"n":12,"field":5,"cosets":[[2,10]]})");
    write_file("cli_b12.json", R"({"n":12,"field":5,"cosets":[[4,8]]})");
    RunResult r = run_cli("equiv cli_a12.json cli_b12.json --format json");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["status"] == "Inconclusive");
    CHECK(report["ci_certified"] == false);
    std::remove("cli_a12.json");
    std::remove("cli_b12.json");
}

TEST_CASE("reports are byte-identical with --no-timing") {
    write_file("cli_x.json", R"({"n":7,"field":2,"cosets":[[1,2,4]]})");
    RunResult a = run_cli("equiv cli_x.json cli_x.json --format json --no-timing --oracle");
    RunResult b = run_cli("equiv cli_x.json cli_x.json --format json --no-timing --oracle");
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["elapsed_ms"].is_null());
    std::remove("cli_x.json");
}

TEST_CASE("verify suites through the CLI") {
    RunResult r = run_cli("verify projector --n 7 --q 2 --format json");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["suite"] == "projector");
    CHECK(report["failed"] == 0);
    CHECK(report["exploratory"] == false);

    RunResult ci = run_cli("verify ci-cyclic --n 5 --q 2 --format json");
    REQUIRE(ci.exit_code == 0);
    json ci_report = json::parse(ci.out);
    CHECK(ci_report["failed"] == 0);
    CHECK(ci_report["stats"]["codes"] == 4);
    CHECK(ci_report["stats"]["perms_per_code"] == 120);

    // uncertified order: exploratory label
    RunResult expl = run_cli("verify ci-cyclic --n 4 --q 3 --format json");
    REQUIRE(expl.exit_code == 0);
    CHECK(json::parse(expl.out)["exploratory"] == true);

    // n = 12 is both uncertified and beyond the scan cap: engine-only survey
    RunResult survey = run_cli("verify ci-cyclic --n 12 --q 5 --format json");
    REQUIRE(survey.exit_code == 0);
    json survey_report = json::parse(survey.out);
    CHECK(survey_report["exploratory"] == true);
    CHECK(survey_report["failed"] == 0);
    CHECK(survey_report["stats"]["codes"] == 256);

    // infeasible params
    CHECK(run_cli("verify ci-cyclic --n 12 --q 5 --enum-cap 4").exit_code == 2);
    CHECK(run_cli("verify ci-groupcode --p 2 --d 2 --q 2").exit_code == 2); // not semisimple
}

TEST_CASE("oracle commands") {
    write_file("cli_h.json", R"({"n":7,"field":2,"cosets":[[1,2,4]]})");
    RunResult paut = run_cli("oracle paut cli_h.json --format json");
    REQUIRE(paut.exit_code == 0);
    CHECK(json::parse(paut.out)["order"] == 168);

    RunResult tc = run_cli("oracle two-closure --n 4 --format json");
    REQUIRE(tc.exit_code == 0);
    CHECK(json::parse(tc.out)["order"] == 4);
    std::remove("cli_h.json");
}

TEST_CASE("idempotent command cross-checks inputs") {
    RunResult r = run_cli("idempotent --n 7 --q 2 --cosets [[1,2,4]] --format json");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["code"]["dim"] == 4);
    CHECK(report["code"]["pairing"] == "splitting_field");

    // an idempotent-only spec reconstructs the code
    write_file("cli_idem.json", R"({"n":7,"field":2,"idempotent":[0,0,0,1,0,1,1]})");
    RunResult r2 = run_cli("idempotent --file cli_idem.json --format json");
    REQUIRE(r2.exit_code == 0);
    json rec = json::parse(r2.out);
    CHECK(rec["code"]["dim"] == 4);
    CHECK(rec["code"]["cosets"].size() == 1);
    std::remove("cli_idem.json");

    // inconsistent spec: dim of zeros {{0}} is 6, declared 3
    write_file("cli_bad.json", R"({"n":7,"field":2,"cosets":[[0]],"dim":3})");
    CHECK(run_cli("idempotent --file cli_bad.json").exit_code == 2);
    std::remove("cli_bad.json");
}
