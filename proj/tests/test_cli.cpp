#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "support.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NSURF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WEXITSTATUS(raw);
    return r;
}

std::string fixture(const std::string& name) { return testsupport::fixture_path(name); }

}  // namespace

TEST_CASE("validate") {
    RunResult r = run("validate --input " + fixture("t2_a.tri"));
    CHECK(r.status == 0);
    CHECK(r.out.find("V - E + F - T = 0") != std::string::npos);
    CHECK(r.out.find("orientable: yes") != std::string::npos);

    RunResult nonor = run("validate --input " + fixture("nonorientable_t2.tri"));
    CHECK(nonor.status == 0);
    CHECK(nonor.out.find("orientable: no") != std::string::npos);
}

TEST_CASE("exit codes") {
    // Parse error.
    std::string bad = fixture("bad_syntax.tri");
    {
        FILE* f = fopen(bad.c_str(), "w");
        REQUIRE(f);
        fputs("tets 1\n0: 0(9999) 0(1023) 0(0132) 0(0132)\n", f);
        fclose(f);
    }
    CHECK(run("validate --input " + bad).status == 2);
    std::remove(bad.c_str());

    // Invariant violation: enumeration refuses non-orientable input.
    CHECK(run("enumerate --input " + fixture("nonorientable_t2.tri")).status == 3);

    // Cap hit: incomplete enumeration is an explicit failure.
    CHECK(run("enumerate --input " + fixture("t2_a.tri") + " --cap 1").status == 4);

    // Incompatible sum operands: two quad spheres of different types.
    RunResult sum = run("sum --input " + fixture("t2_double.tri") +
                        " --vec-a \"v [0 0 0 0 1 0 0 0 0 0 0 1 0 0]\""
                        " --vec-b \"v [0 0 0 0 0 1 0 0 0 0 0 0 1 0]\"");
    CHECK(sum.status == 5);

    // Operand that fails the matching equations: invariant violation.
    RunResult nonsol = run("sum --input " + fixture("t2_double.tri") +
                           " --vec-a \"v [0 0 0 0 1 0 0 0 0 0 0 0 0 0]\""
                           " --vec-b \"v [0 0 0 0 1 0 0 0 0 0 0 1 0 0]\"");
    CHECK(nonsol.status == 3);

    // Unknown flag.
    CHECK(run("validate --nope").status == 1);
}

TEST_CASE("report and determinism") {
    std::string args = "report --input " + fixture("t3_a.tri") + " --format json --genus 7";
    RunResult a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"c\": \"1/12\"") != std::string::npos);
    CHECK(a.out.find("\"bound\": \"1\"") != std::string::npos);
    CHECK(a.out.find("\"vacuous\": false") != std::string::npos);

    // Vacuous fixture: the flag appears in both formats.
    RunResult vac = run("report --input " + fixture("t2_double.tri") + " --format json");
    CHECK(vac.status == 0);
    CHECK(vac.out.find("\"vacuous\": true") != std::string::npos);
    RunResult vact = run("report --input " + fixture("t2_double.tri"));
    CHECK(vact.out.find("vacuous") != std::string::npos);
}

TEST_CASE("sum command") {
    // Adding a vertex link to itself: chi and weight double.
    RunResult r = run("sum --input " + fixture("t2_double.tri") +
                      " --vec-a \"v [1 0 0 0 0 0 0 1 0 0 0 0 0 0]\""
                      " --vec-b \"v [1 0 0 0 0 0 0 1 0 0 0 0 0 0]\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("v [2 0 0 0 0 0 0 2 0 0 0 0 0 0]") != std::string::npos);
    CHECK(r.out.find("(additive)") != std::string::npos);

    // Clashing quad types report the offending tetrahedron on stderr.
    RunResult clash = run("sum --input " + fixture("t2_double.tri") +
                          " --vec-a \"v [0 0 0 0 1 0 0 0 0 0 0 1 0 0]\""
                          " --vec-b \"v [0 0 0 0 0 0 1 0 0 0 0 0 0 1]\"");
    CHECK(clash.status == 5);
}

TEST_CASE("hyperbolic sweep") {
    RunResult r = run("check-hyperbolic --g-range 2..64");
    CHECK(r.status == 0);
    size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 63);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
