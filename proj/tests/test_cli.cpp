#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "ratshuffle/engine.hpp"
#include "ratshuffle/format.hpp"

using namespace ratshuffle;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(RATSHUFFLE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("compute-fmn text output") {
    CommandResult r = run_cli("compute-fmn --m 2 --n 5 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(q^2+q*t+t^2)*s[5] + (q+t)*s[4,1] + s[3,2]\n");
}

TEST_CASE("verify exits cleanly") {
    CommandResult r = run_cli("verify --m 3 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find("fail=0") != std::string::npos);
}

TEST_CASE("non-coprime input is rejected") {
    CommandResult r = run_cli("compute-fmn --m 2 --n 4");
    CHECK(r.exit_code == 2);
}

TEST_CASE("budget overflow is rejected") {
    CommandResult r = run_cli("compute-fmn --m 3 --n 12 --budget 100");
    CHECK(r.exit_code == 2);
}

TEST_CASE("json output round trips") {
    CommandResult r = run_cli("compute-fmn --m 2 --n 5 --format json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["m"] == 2);
    CHECK(doc["n"] == 5);
    CHECK(doc["command"] == "compute-fmn");
    REQUIRE(doc["results"].size() == 1);

    // rebuild the expansion from the json and compare with the library
    SchurExpansion rebuilt(5);
    for (const auto& entry : doc["results"][0]["schur"]) {
        Partition lam(entry["partition"].get<std::vector<int>>());
        CoeffPoly c;
        for (const auto& term : entry["terms"])
            c += CoeffPoly::monomial(term["q"].get<int>(), term["t"].get<int>(),
                                     BigInt(term["coeff"].get<std::string>()));
        rebuilt.add(lam, c);
    }
    CHECK(rebuilt == f_of_mn(2, 5));
}

TEST_CASE("csv output carries the same coefficient data") {
    CommandResult r = run_cli("compute-fmn --m 2 --n 5 --format csv");
    REQUIRE(r.exit_code == 0);
    // one line per (partition, q, t) triple plus the header
    int lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    long long triples = 0;
    for (const auto& [lam, c] : f_of_mn(2, 5).coeffs())
        triples += static_cast<long long>(c.terms().size());
    CHECK(lines == triples + 1);
    CHECK(r.output.find("\"[3,2]\",0,0,1") != std::string::npos);
}

TEST_CASE("compute-fd restricted to one path") {
    CommandResult r = run_cli("compute-fd --m 2 --n 5 --path 1,1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("t^2*s[5] + t*s[4,1] + s[3,2]") != std::string::npos);

    CommandResult all = run_cli("compute-fd --m 2 --n 5 --format text");
    CHECK(all.exit_code == 0);
    int lines = 0;
    for (char ch : all.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 3);
}

TEST_CASE("deterministic output") {
    CommandResult a = run_cli("compute-fd --m 3 --n 4 --format json");
    CommandResult b = run_cli("compute-fd --m 3 --n 4 --format json");
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
}

TEST_CASE("paths and parkfns commands") {
    CommandResult paths = run_cli("paths --m 2 --n 5");
    CHECK(paths.exit_code == 0);
    CHECK(paths.output.find("path=[] area=2") != std::string::npos);
    CHECK(paths.output.find("path=[1,1] area=0") != std::string::npos);

    CommandResult fns = run_cli("parkfns --m 2 --n 3 --format csv");
    CHECK(fns.exit_code == 0);
    int lines = 0;
    for (char ch : fns.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 5);  // header + 4 parking functions
}

TEST_CASE("symmetries command never gates") {
    CommandResult r = run_cli("symmetries --m 2 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("q<->t symmetric: yes") != std::string::npos);
}
