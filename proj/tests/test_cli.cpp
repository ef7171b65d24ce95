#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "hulthen/serialize.hpp"

using nlohmann::json;
using namespace hulthen;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + HULTHEN_LAB_BIN + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("spectrum: values and exit code") {
    auto r = run("spectrum --v 12 --q 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j["states"].size() == 3);
    CHECK(j["states"][0]["energy_reduced"].get<double>() == -30.25);
    CHECK(j["states"][1]["energy_reduced"].get<double>() == -4.0);
    CHECK(j["states"][2]["energy_reduced"].get<double>() == -0.25);
}

TEST_CASE("spectrum: physical parameterization") {
    auto r = run("spectrum --mu 6 --delta 1 --q 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["params"]["v"].get<double>() == 12.0);
    CHECK(j["states"][0]["energy_physical"].get<double>() == -15.125);
}

TEST_CASE("exit codes for bad or empty input") {
    CHECK(run("spectrum --v 1 --q 1").code == 3);    // no bound states
    CHECK(run("spectrum --q 1").code == 2);          // missing coupling
    CHECK(run("spectrum --v 12").code == 2);         // missing q
    CHECK(run("spectrum --v -5 --q 1").code == 2);   // invalid domain
    CHECK(run("nonsense --v 12 --q 1").code == 2);   // unknown subcommand
    CHECK(run("spectrum --v 12 --q 1 --mu 6 --delta 1").code == 2);  // both parameterizations
    CHECK(run("state --v 12 --q 1 --n 7").code == 3);                // outside the spectrum
    CHECK(run("state --v 12.5e0 --q 1 --rational").code == 2);       // not an exact rational
}

TEST_CASE("state: normalization constant and JSON round-trip of the wavefunction") {
    auto r = run("state --v 12 --q 1 --n 0");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    double nc = j["norm_constant"].get<double>();
    CHECK(nc == doctest::Approx(std::sqrt(858.0)).epsilon(1e-13));

    auto psi = exppoly_from_json(j["exppoly"]);
    for (const auto& s : j["samples"]) {
        double rr = s["r"].get<double>();
        double want = s["value"].get<double>();
        CHECK(std::abs(nc * exppoly::evaluate(psi, rr) - want) <=
              1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("csv and json emit identical numbers") {
    auto cj = run("spectrum --v 30 --q 1.7");
    auto cc = run("spectrum --v 30 --q 1.7 --format csv");
    REQUIRE(cj.code == 0);
    REQUIRE(cc.code == 0);
    auto j = json::parse(cj.out);
    std::size_t pos = cc.out.find('\n') + 1;  // skip header
    for (const auto& row : j["states"]) {
        std::size_t eol = cc.out.find('\n', pos);
        std::string line = cc.out.substr(pos, eol - pos);
        pos = eol + 1;
        std::size_t comma = line.find(',');
        CHECK(std::strtod(line.c_str() + comma + 1, nullptr) ==
              row["energy_reduced"].get<double>());
    }
}

TEST_CASE("chain: routes, proportionality and norms") {
    auto r = run("chain --v 12 --q 1 --j 1 --n 1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["barrier"].get<double>() == 2.0);
    CHECK(j["proportionality"].get<double>() == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(j["norm_eq50"].get<double>() == doctest::Approx(0.04375).epsilon(1e-12));
    CHECK(j["norm_eq82"].contains("reading_a"));
    CHECK(j["norm_eq82"].contains("reading_b"));

    auto wr = exppoly_from_json(j["routes"]["wronskian"]);
    auto cf = exppoly_from_json(j["routes"]["closed_form"]);
    double prop = j["proportionality"].get<double>();
    for (double rr : {0.5, 1.0, 3.0})
        CHECK(exppoly::evaluate(wr, rr) ==
              doctest::Approx(prop * exppoly::evaluate(cf, rr)).epsilon(1e-11));
}

TEST_CASE("chain depth cap honors the environment override") {
    CHECK(run("chain --v 12 --q 1 --j 1 --n 1", "HULTHEN_MAX_CHAIN=0").code == 3);
    CHECK(run("chain --v 12 --q 1 --j 1 --n 1", "HULTHEN_MAX_CHAIN=2").code == 0);
    CHECK(run("chain --v 12 --q 1 --j 5 --n 5").code == 3);  // default cap is 4
}

TEST_CASE("rational mode runs the exact pipeline") {
    auto r = run("chain --v 12 --q 1 --j 2 --n 2 --rational");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["proportionality"].get<double>() > 0.0);

    auto s = run("state --v 50 --q 2 --n 1 --rational");
    REQUIRE(s.code == 0);
}

TEST_CASE("verify: pass and the perturbation hook") {
    auto ok = run("verify --v 12 --q 1");
    CHECK(ok.code == 0);
    auto j = json::parse(ok.out);
    CHECK(j["all_passed"].get<bool>());
    CHECK(j["checks"].size() > 10);

    auto bad = run("verify --v 12 --q 1 --perturb-energy 1e-4");
    CHECK(bad.code == 1);
    auto jb = json::parse(bad.out);
    CHECK_FALSE(jb["all_passed"].get<bool>());
}
