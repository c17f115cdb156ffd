#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "thermoprior/schemes.hpp"

using json = nlohmann::ordered_json;
using namespace thermoprior;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(THERMOPRIOR_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: expand reproduces the squeezed-thermal terms") {
    RunResult r = run_cli("expand squeezed-thermal-quantum --scheme quantum --order 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "1/2 beta^-1"));
    CHECK(contains(r.output, "7/192 beta^1"));
    CHECK(contains(r.output, "667/184320 beta^3"));
}

TEST_CASE("cli: classify") {
    RunResult r = run_cli("classify displaced-thermal-quantum --scheme quantum");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "BayesLaplace"));
    CHECK(contains(r.output, "1/pi"));

    RunResult n = run_cli("classify ideal-gas --method numeric");
    CHECK(n.exit_code == 0);
    CHECK(contains(n.output, "Jeffreys"));
    CHECK(contains(n.output, "slope"));
}

TEST_CASE("cli: unknown model and scheme exit with a usage error") {
    RunResult r = run_cli("classify no-such-model");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "valid ids"));
    CHECK(contains(r.output, "spin-half-bures"));  // the message lists them
    RunResult s = run_cli("expand ideal-gas --scheme quantum");
    CHECK(s.exit_code == 1);
    RunResult t = run_cli("expand ideal-gas --scheme euclidean");
    CHECK(t.exit_code == 1);
}

TEST_CASE("cli: json envelope and byte-identical round trip") {
    RunResult r = run_cli("expand spin-half-bures --order 8 --json");
    CHECK(r.exit_code == 0);
    json env = json::parse(r.output);
    CHECK(env["command"] == "expand");
    CHECK(env["version"] == "0.1.0");
    CHECK(env["parameters"]["order"] == 8);
    CHECK(env["result"]["valuation"] == 0);
    CHECK(env["result"]["factor"]["rational"] == "1/2");
    CHECK(env["result"]["terms"][0]["coefficient"] == "1/2");
    // parse -> re-serialize is byte-identical
    CHECK(env.dump(2) + "\n" == r.output);
}

TEST_CASE("cli: moments json") {
    RunResult r = run_cli("moments displaced-thermal-quantum --json");
    CHECK(r.exit_code == 0);
    json env = json::parse(r.output);
    CHECK(env["result"]["proper"] == true);
    CHECK(std::abs(env["result"]["normalization"].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(env["result"]["second_moment"].get<double>() - 9.8696044010893586) < 1e-7);
    CHECK(env.dump(2) + "\n" == r.output);

    RunResult imp = run_cli("moments squeezed-thermal-lavenda");
    CHECK(imp.exit_code == 0);
    CHECK(contains(imp.output, "improper"));
}

TEST_CASE("cli: verify exits clean with informational discrepancies") {
    RunResult r = run_cli("verify --json");
    CHECK(r.exit_code == 0);
    json env = json::parse(r.output);
    CHECK(env["result"]["ok"] == true);
    CHECK(env["result"]["oracle_mismatch"] == 0);
    CHECK(env["result"]["paper_discrepancy"].get<int>() >= 2);
    CHECK(env.dump(2) + "\n" == r.output);
}

TEST_CASE("cli: deterministic bytes across runs") {
    for (const char* cmd : {"models --json", "expand squeezed-thermal-lavenda --json",
                            "prior-table fermi-oscillator --points 7 --csv",
                            "classify spin-one-extended --method numeric --json"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK_MESSAGE(a.output == b.output, cmd);
    }
}

TEST_CASE("cli: csv prior table agrees with the expansion where it is exact") {
    RunResult r = run_cli(
        "prior-table spin-half-bures --beta-min 0.5 --beta-max 2.5 --points 5 --csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "beta,omega,truncation_indicator");

    PriorExpansion p = prior_expansion(lookup("spin-half-bures"), Scheme::Lavenda, 12);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string b_s, w_s, t_s;
        std::getline(fields, b_s, ',');
        std::getline(fields, w_s, ',');
        std::getline(fields, t_s, ',');
        const double b = std::stod(b_s), w = std::stod(w_s), t = std::stod(t_s);
        SeriesEval ev = eval_truncated(p.expansion, b);
        CHECK(std::abs(ev.value - w) <= t);  // within the truncation indicator
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("cli: parameter overrides reach the registry") {
    RunResult r = run_cli("expand fermi-oscillator --eps0 2 --order 8 --json");
    CHECK(r.exit_code == 0);
    json env = json::parse(r.output);
    // omega = (eps0/2) sech(eps0 beta / 2) = 1 - b^2/2 + ...
    CHECK(env["result"]["terms"][0]["coefficient"] == "1");
    CHECK(env["result"]["terms"][1]["coefficient"] == "-1/2");
}
