#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "polygauss/cli.hpp"
#include "polygauss/verify.hpp"
#include "support/testutil.hpp"

using namespace polygauss;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("run_cases: parallel kernel matches the serial reference") {
    auto fn = [](std::size_t i) { return i % 3 != 0; };
    auto serial = run_cases(64, fn, false);
    auto parallel = run_cases(64, fn, true);
    CHECK(serial == parallel);

    // a throwing case counts as a failure instead of escaping the loop
    auto throwing = [](std::size_t i) -> bool {
        if (i == 5) throw std::runtime_error("boom");
        return true;
    };
    for (bool par : {false, true}) {
        auto got = run_cases(8, throwing, par);
        CHECK(!got[5]);
        CHECK(got[4]);
    }
}

TEST_CASE("verification catalog passes, serial and parallel agree") {
    VerifyOptions serial_opts;
    serial_opts.parallel = false;
    std::vector<CheckResult> serial = run_verification_catalog(serial_opts);
    for (const auto& c : serial) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }

    VerifyOptions parallel_opts;
    std::vector<CheckResult> parallel = run_verification_catalog(parallel_opts);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].name == parallel[i].name);
        CHECK(serial[i].pass == parallel[i].pass);
        CHECK(serial[i].detail == parallel[i].detail);
    }
}

TEST_CASE("negative control fails exactly the extension-defect check") {
    CheckResult mutated = check_extension_defect(/*mutated_free_ring=*/true, /*parallel=*/false);
    CHECK(!mutated.pass);
}

TEST_CASE("exit-code contract on the golden command matrix") {
    // true verdict -> 0
    CHECK(cli({"member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2 + t^2", "--elem",
               "s*t"}) == 0);
    // false verdict -> 1
    CHECK(cli({"member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2 + t^2", "--elem",
               "s^2"}) == 1);
    // parse error -> 2
    CHECK(cli({"member", "--ring", "QQ[s;t]", "--ideal", "s", "--elem", "s"}) == 2);
    CHECK(cli({"member", "--ring", "QQ[s,t]", "--ideal", "s,", "--elem", "s"}) == 2);
    // usage error -> 2
    CHECK(cli({"member", "--ring", "QQ[s,t]"}) == 2);
    CHECK(cli({"frobnicate"}) == 2);
    // unsupported ring for a domain-only question -> 2
    CHECK(cli({"invertible", "--ring", "QQ[x,y]", "--ideal", "x"}) == 2);

    CHECK(cli({"equal", "--ring", "QQ[x,y]", "--ideal", "x, y", "--ideal2", "y, x + y"}) == 0);
    CHECK(cli({"equal", "--ring", "QQ[x,y]", "--ideal", "x", "--ideal2", "x^2"}) == 1);

    CHECK(cli({"gaussian", "--ring", "QQ[x,y] domain", "--poly", "x + x*X"}) == 0);
    std::string gout;
    CHECK(cli({"gaussian", "--ring", "QQ[x,y] domain", "--poly", "x + y*X", "--degree",
               "1"},
              &gout) == 1);
    CHECK(gout.find("witness") != std::string::npos);

    CHECK(cli({"invertible", "--ring", "QQ[x,y] domain", "--ideal", "x"}) == 0);
    CHECK(cli({"invertible", "--ring", "QQ[x,y] domain", "--ideal", "x, y"}) == 1);

    CHECK(cli({"dm", "--ring", "QQ[s,t,u,v]", "--poly", "s + t*X", "--poly2",
               "u + v*X"}) == 0);

    // resource-limit abort -> 3
    groebner_cache_clear();
    setenv("POLYGAUSS_GB_MAX_GENERATORS", "1", 1);
    CHECK(cli({"gb", "--ring", "QQ[x,y]", "--gens", "x^2 - y, y^2 - x"}) == 3);
    unsetenv("POLYGAUSS_GB_MAX_GENERATORS");
    groebner_cache_clear();
}

TEST_CASE("cli reproduces the worked command examples") {
    std::string out;
    CHECK(cli({"nu", "--ring", "QQ[x,y] domain", "--poly", "x + y*X", "--at", "x,y",
               "--mmax", "3", "--no-timing"},
              &out) == 0);
    CHECK(out.find("2 3 5 9") != std::string::npos);
    CHECK(out.find("not Gaussian") != std::string::npos);

    CHECK(cli({"content", "--ring", "GF(2)[a,b,c]/(a^2 - b^2*c)", "--poly",
               "a^2 + b^2*X^2", "--no-timing"},
              &out) == 0);
    CHECK(out.find("principal") != std::string::npos);

    CHECK(cli({"gb", "--ring", "QQ[x,y]", "--order", "lex", "--gens",
               "x^2 + y^2 - 1, 1 - x", "--no-timing"},
              &out) == 0);
    CHECK(out.find("x - 1") != std::string::npos);
    CHECK(out.find("y^2") != std::string::npos);
}

TEST_CASE("json reports carry the schema and round-trip as json") {
    std::string out;
    CHECK(cli({"member", "--ring", "QQ[s,t]", "--ideal", "s*t, s^2 + t^2", "--elem", "s^2",
               "--format", "json", "--no-timing"},
              &out) == 1);
    auto j = nlohmann::json::parse(out);
    CHECK(j["schema"] == "polygauss-report/1");
    CHECK(j["command"] == "member");
    CHECK(j["result"]["member"] == false);
    CHECK(!j.contains("timing_ms"));

    CHECK(cli({"gaussian", "--ring", "QQ[x,y] domain", "--poly", "x + y*X", "--format",
               "json"},
              &out) == 1);
    j = nlohmann::json::parse(out);
    CHECK(j["result"]["status"] == "non-gaussian");
    CHECK(j["result"]["witness"]["element"] == "x^2");
    CHECK(j.contains("timing_ms"));
}

TEST_CASE("verify-paper is deterministic in its comparison form") {
    std::string first, second;
    CHECK(cli({"verify-paper", "--no-timing"}, &first) == 0);
    CHECK(cli({"verify-paper", "--no-timing", "--serial"}, &second) == 0);
    CHECK(first == second);
    CHECK(first.find("PASS extension-defect") != std::string::npos);
    CHECK(first.find("all checks passed") != std::string::npos);
}
