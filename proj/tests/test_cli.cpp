#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "sl2/config.hpp"
#include "sl2/report.hpp"
#include "sl2/verify.hpp"

using namespace sl2;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SL2_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("config parsing") {
    SUBCASE("sections and overrides") {
        std::stringstream ss;
        ss << "[grid]\njmax = 8\ndmu=0.1\n\n[run]\nseed=7\ntolerance_scale = 2.5\n";
        SuiteConfig c;
        c.parse(ss);
        CHECK(c.jmax == 8);
        CHECK(c.dmu == doctest::Approx(0.1));
        CHECK(c.seed == 7);
        CHECK(c.tolerance_scale == doctest::Approx(2.5));
        CHECK(c.k_nodes == 256);  // untouched default
    }
    SUBCASE("unknown keys and sections are rejected") {
        std::stringstream bad1("[grid]\nnot_a_key=1\n");
        SuiteConfig c;
        CHECK_THROWS(c.parse(bad1));
        std::stringstream bad2("[nope]\njmax=2\n");
        CHECK_THROWS(c.parse(bad2));
        std::stringstream bad3("jmax 4\n");
        CHECK_THROWS(c.parse(bad3));
    }
    SUBCASE("comments and blank lines are ignored") {
        std::stringstream ss("# header\n[run]\nseed=3 # trailing\n\n");
        SuiteConfig c;
        c.parse(ss);
        CHECK(c.seed == 3);
    }
    SUBCASE("json embedding is stable") {
        SuiteConfig c;
        const auto j = c.to_json();
        CHECK(j.at("run").at("seed").get<unsigned long>() == 42);
        CHECK(j.at("grid").at("jmax").get<int>() == 16);
    }
}

TEST_CASE("report structure") {
    SuiteResult r;
    r.suite = "demo";
    r.checks.push_back({"b-check", "x = y", 1e-9, 1e-6, true, 3});
    r.checks.push_back({"a-check", "u = v", 2e-3, 1e-6, false, 1});
    const auto j = suite_to_json(r);
    CHECK(j.at("pass") == false);
    // checks are sorted by name
    CHECK(j.at("checks").at(0).at("name") == "a-check");
    CHECK(j.at("checks").at(1).at("name") == "b-check");
    CHECK(j.at("checks").at(1).at("identity") == "x = y");
}

TEST_CASE("cli eval commands") {
    SUBCASE("xi rows") {
        const RunResult r = run_cli("eval xi --t 0,1,2");
        CHECK(r.exit_code == 0);
        std::stringstream ss(r.output);
        std::string line;
        std::getline(ss, line);
        CHECK(line == "t,xi");
        std::getline(ss, line);
        CHECK(line.substr(0, 2) == "0,");
        CHECK(std::stod(line.substr(2)) == doctest::Approx(1.0).epsilon(1e-10));
        std::getline(ss, line);
        CHECK(std::stod(line.substr(2)) == doctest::Approx(0.795651695605975).epsilon(1e-8));
    }
    SUBCASE("c-function value at the odd spot") {
        const RunResult r = run_cli("eval c-function --side plus --j 1 --mu 0");
        CHECK(r.exit_code == 0);
        std::stringstream ss(r.output);
        std::string header, row;
        std::getline(ss, header);
        CHECK(header == "side,j,mu,re,im");
        std::getline(ss, row);
        double re = 0.0, im = 1.0;
        std::sscanf(row.c_str(), "plus,1,0,%lf,%lf", &re, &im);
        CHECK(re == doctest::Approx(pi).epsilon(1e-12));
        CHECK(im == doctest::Approx(0.0));
    }
    SUBCASE("norm of a diagonal matrix") {
        const RunResult r = run_cli("eval norm --g 2,0,0,0.5");
        CHECK(r.exit_code == 0);
        CHECK(r.output == "norm\n2\n");
    }
    SUBCASE("malformed parameters exit with the usage code") {
        CHECK(run_cli("eval norm --g 1,2,3").exit_code == 2);
        CHECK(run_cli("eval nonsense").exit_code == 2);
        CHECK(run_cli("table c-table --jmax -3").exit_code == 2);
        CHECK(run_cli("table plancherel-table even --dmu 0").exit_code == 2);
    }
}

TEST_CASE("cli tables") {
    SUBCASE("c-table carries pole flags exactly at even j, mu = 0") {
        const RunResult r = run_cli("table c-table --jmax 2 --mu-max 1 --dmu 0.5");
        CHECK(r.exit_code == 0);
        std::stringstream ss(r.output);
        std::string line;
        std::getline(ss, line);
        CHECK(line == "side,j,mu,re,im,pole");
        int poles = 0, rows = 0;
        while (std::getline(ss, line)) {
            ++rows;
            if (line.back() == '1') {
                ++poles;
                CHECK(line.find(",0,0,0,1") != std::string::npos);
            }
        }
        CHECK(rows == 2 * 5 * 5);  // two sides, j in [-2,2], five mu nodes
        CHECK(poles == 2 * 3);     // j in {-2, 0, 2} at mu = 0 per side
    }
    SUBCASE("plancherel table starts at zero for the even series") {
        const RunResult r = run_cli("table plancherel-table even --mu-max 1 --dmu 0.5");
        CHECK(r.exit_code == 0);
        std::stringstream ss(r.output);
        std::string header, first;
        std::getline(ss, header);
        std::getline(ss, first);
        CHECK(first == "even,0,0");
        const RunResult r2 = run_cli("table plancherel-table odd --mu-max 1 --dmu 0.5");
        std::stringstream ss2(r2.output);
        std::getline(ss2, header);
        std::getline(ss2, first);
        CHECK(first.substr(0, 4) == "odd,");
        CHECK(std::stod(first.substr(6)) == doctest::Approx(1.0 / (pi * pi)).epsilon(1e-12));
    }
}

TEST_CASE("cli verify determinism and exit codes") {
    // group-core twice with the same seed: byte-identical reports
    const RunResult a = run_cli("verify group-core --seed 42 --coarse");
    const RunResult b = run_cli("verify group-core --seed 42 --coarse");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"pass\": true") != std::string::npos);
    // a different seed still passes but may differ textually
    const RunResult c = run_cli("verify group-core --seed 7 --coarse");
    CHECK(c.exit_code == 0);
    // unknown suite is a usage error
    CHECK(run_cli("verify nonsense").exit_code == 2);
    // config file with an unknown key is a configuration error
    {
        std::ofstream bad("/tmp/sl2_bad_config.txt");
        bad << "[grid]\nunknown_key=3\n";
    }
    CHECK(run_cli("verify group-core --config /tmp/sl2_bad_config.txt").exit_code == 2);
    // tolerance-scale and config round through the report
    const RunResult d = run_cli("verify group-core --coarse --tolerance-scale 10 --seed 42");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("\"tolerance_scale\": 10.0") != std::string::npos);
}
