#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Runs the installed binary through the shell; env assignments may be
// prefixed to the argument string.
RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("LCT_BIN");
    REQUIRE(bin != nullptr);
    const std::string out_file = "cli_stdout.tmp";
    const std::string err_file = "cli_stderr.tmp";
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + bin + "' " + args + " >" +
                            out_file + " 2>" + err_file;
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::string quoted(const std::string& path) { return "'" + path + "'"; }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ideal command reports the certified threshold") {
    const RunResult r = run_cli("ideal " + quoted(data_path("curve_345.json")));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lct = 13/9"));
    CHECK(contains(r.out, "status: exact (criterion witness found)"));
    CHECK(r.err.empty());
}

TEST_CASE("ideal command with certificate details") {
    const RunResult r =
        run_cli("ideal --certificate " + quoted(data_path("gorenstein.json")));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lct = 11/6"));
    CHECK(contains(r.out, "witness = "));
    CHECK(contains(r.out, "rank = 8, kernel dimension = 2"));
}

TEST_CASE("json reports are machine readable and byte stable") {
    const std::string args = "--json ideal --certificate " + quoted(data_path("curve_345.json"));
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const nlohmann::json rep = nlohmann::json::parse(first.out);
    CHECK(rep["command"] == "ideal");
    CHECK(rep["status"] == "ok");
    CHECK(rep["result"]["lct"] == "13/9");
    CHECK(rep["result"]["certified"] == true);
    CHECK(rep["result"]["certificate"]["rank"] == 5);
    CHECK(rep["result"]["certificate"]["kernel_dimension"] == 1);
    CHECK(rep["diagnostics"].empty());
}

TEST_CASE("invalid input exits 2 and names the violation") {
    const RunResult r = run_cli("ideal " + quoted(data_path("invalid_zero_exponent.json")));
    CHECK(r.code == 2);
    CHECK(contains(r.err, "binomial 1: minus exponents are all zero"));

    const RunResult json_r =
        run_cli("--json ideal " + quoted(data_path("invalid_zero_exponent.json")));
    CHECK(json_r.code == 2);
    const nlohmann::json rep = nlohmann::json::parse(json_r.out);
    CHECK(rep["status"] == "error");
    CHECK(!rep["diagnostics"].empty());

    const RunResult missing = run_cli("ideal /nonexistent/ideal.json");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot open input file"));

    const RunResult bad = run_cli("ideal " + quoted(data_path("invalid_json.json")));
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "not valid JSON"));
}

TEST_CASE("uncertified values exit 3 unless explicitly allowed") {
    const RunResult refused = run_cli("ideal " + quoted(data_path("upper_bound.json")));
    CHECK(refused.code == 3);
    CHECK(contains(refused.out, "status: upper bound only"));

    const RunResult allowed =
        run_cli("--json ideal --allow-upper-bound " + quoted(data_path("upper_bound.json")));
    CHECK(allowed.code == 0);
    const nlohmann::json rep = nlohmann::json::parse(allowed.out);
    CHECK(rep["status"] == "upper_bound_only");
    CHECK(rep["result"]["lct"] == "1/2");
    CHECK(rep["result"]["certified"] == false);
}

TEST_CASE("curve command classifies and evaluates") {
    const RunResult r = run_cli("curve 3 4 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "kind = almost complete intersection"));
    CHECK(contains(r.out, "table row 1: 13/9"));
    CHECK(contains(r.out, "program value = 13/9 (certified)"));
    CHECK(contains(r.out, "lct = 13/9"));

    const RunResult j = run_cli("--json curve 10 4 9 --method table");
    CHECK(j.code == 0);
    const nlohmann::json rep = nlohmann::json::parse(j.out);
    CHECK(rep["result"]["kind"] == "complete_intersection");
    CHECK(rep["result"]["parameters"]["a1"] == 5);
    CHECK(rep["result"]["parameters"]["a2"] == 2);
    CHECK(rep["result"]["table"]["row"] == 4);
    CHECK(rep["result"]["lct"] == "5/4");
    CHECK(!rep["result"].contains("program"));

    const RunResult lp_only = run_cli("--json curve 3 4 5 --method lp");
    const nlohmann::json rep2 = nlohmann::json::parse(lp_only.out);
    CHECK(!rep2["result"].contains("table"));
    CHECK(rep2["result"]["program"]["certified"] == true);
}

TEST_CASE("curve command rejects non-curves") {
    const RunResult r = run_cli("curve 2 4 6");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "no common factor"));

    const RunResult minimal = run_cli("curve 2 3 5");
    CHECK(minimal.code == 2);
    CHECK(contains(minimal.err, "not minimal"));

    const RunResult small = run_cli("curve 1 2 3");
    CHECK(small.code == 2);
    CHECK(contains(small.err, "at least 2"));
}

TEST_CASE("monomial command computes threshold and membership") {
    const RunResult r = run_cli("monomial " + quoted(data_path("monomial_23.json")));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lct = 5/6"));

    const RunResult inside = run_cli("monomial " + quoted(data_path("monomial_23.json")) +
                                     " --t 4/5 --contains 0,0");
    CHECK(inside.code == 0);
    CHECK(contains(inside.out, "contains = true"));

    const RunResult outside = run_cli("monomial " + quoted(data_path("monomial_23.json")) +
                                      " --t 5/6 --contains 0,0");
    CHECK(outside.code == 0);
    CHECK(contains(outside.out, "contains = false"));

    const RunResult half = run_cli("monomial " + quoted(data_path("monomial_23.json")) +
                                   " --t 5/6");
    CHECK(half.code == 2);
    CHECK(contains(half.err, "--t and --contains must be given together"));

    const RunResult binom = run_cli("monomial " + quoted(data_path("cusp.json")));
    CHECK(binom.code == 2);
    CHECK(contains(binom.err, "binomial generators are not supported"));
}

TEST_CASE("verify command counts generator powers") {
    const RunResult r = run_cli("--json verify " + quoted(data_path("cusp.json")) + " --prime 7");
    CHECK(r.code == 0);
    const nlohmann::json rep = nlohmann::json::parse(r.out);
    CHECK(rep["result"]["nu"] == 5);
    CHECK(rep["result"]["q"] == 7);
    CHECK(rep["result"]["lct"] == "5/6");
    CHECK(rep["result"]["witness_modulus"] == 6);
    CHECK(rep["result"]["lower_bound"] == "5");
    CHECK(rep["result"]["bound_satisfied"] == true);

    const RunResult text = run_cli("verify " + quoted(data_path("cusp.json")) + " --prime 7");
    CHECK(contains(text.out, "nu = 5"));
    CHECK(contains(text.out, "lower bound 5: satisfied"));

    // 5 is not 1 mod 6: the count still runs, with a warning.
    const RunResult warn = run_cli("verify " + quoted(data_path("cusp.json")) + " --prime 5");
    CHECK(warn.code == 0);
    CHECK(contains(warn.err, "is not 1 mod 6"));
    CHECK(contains(warn.out, "nu = "));
}

TEST_CASE("budget cap exits 4 and the env override is validated") {
    const RunResult r = run_cli("verify " + quoted(data_path("cusp.json")) + " --prime 7 --exp 2",
                                "LCT_BUDGET=10");
    CHECK(r.code == 4);
    CHECK(contains(r.err, "budget exceeded"));

    const RunResult bad = run_cli("verify " + quoted(data_path("cusp.json")) + " --prime 7",
                                  "LCT_BUDGET=ten");
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "LCT_BUDGET must be a positive integer"));
}

TEST_CASE("quiet mode silences stdout only") {
    const RunResult r = run_cli("--quiet ideal " + quoted(data_path("curve_345.json")));
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    const RunResult warn =
        run_cli("--quiet verify " + quoted(data_path("cusp.json")) + " --prime 5");
    CHECK(warn.out.empty());
    CHECK(contains(warn.err, "is not 1 mod 6"));
}

TEST_CASE("usage errors and help") {
    const RunResult none = run_cli("");
    CHECK(none.code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.out, "ideal"));
    CHECK(contains(help.out, "curve"));

    const RunResult badmethod = run_cli("curve 3 4 5 --method fast");
    CHECK(badmethod.code == 2);
}
