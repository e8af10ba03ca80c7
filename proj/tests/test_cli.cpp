#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; /* stdout only */
};

std::string cli_path() {
    const char* path = std::getenv("QPART_CLI");
    REQUIRE_MESSAGE(path != nullptr,
                    "QPART_CLI must point at the built binary");
    return path;
}

RunResult run(const std::string& args) {
    std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("count examples") {
    RunResult r = run("count --class duplicate --s 6 --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "5\n");

    r = run("count --class congruent --s 4 --n 24 --engine recurrence");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "350\n");

    r = run("count --class modular --s 4 --n 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run("count --class modular --s 4 --n 18 --check");
    CHECK(r.exit_code == 0);

    r = run("count --class wclass --k 3 --i 2 --n 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "13\n");

    r = run("count --class pod --n 10 --engine series");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "16\n");
}

TEST_CASE("count rejects bad parameters") {
    CHECK(run("count --class modular --s 5 --n 4").exit_code == 1);
    CHECK(run("count --class nosuch --n 4").exit_code == 1);
    CHECK(run("count --class modular --s 4").exit_code == 1);
    /* No product form for the difference-condition class. */
    CHECK(run("count --class wclass --k 3 --i 2 --n 12 --engine series")
              .exit_code == 1);
}

TEST_CASE("bijection examples and exit codes") {
    RunResult r = run("bijection to-duplicate --s 4 \"3,2,1^5\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3,2^3,1\n");

    r = run("bijection to-congruent --s 8 \"4,3,2,1^9\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3,1^15\n");

    r = run("bijection to-congruent --s 4 \"9,1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "9,1\n");

    r = run("bijection to-congruent --s 4 \"9,1\" --trace");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("9,1\n") != std::string::npos);
    CHECK(r.output.find("[") != std::string::npos);

    /* Parse failure. */
    CHECK(run("bijection to-congruent --s 4 \"9,,1\"").exit_code == 1);
    /* Class precondition failure: multiplicity 2 is not 0,1 (mod 4). */
    CHECK(run("bijection to-congruent --s 4 \"2^2\"").exit_code == 3);
    CHECK(run("bijection sideways --s 4 \"9,1\"").exit_code == 1);
}

TEST_CASE("verify command") {
    RunResult r = run("verify equinumerosity --s 6 --max-n 25");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 4) == "PASS");

    r = run("verify merca --max-n 50");
    CHECK(r.exit_code == 0);

    r = run("verify congruence-spot --family radu-sellers");
    CHECK(r.exit_code == 0);

    /* The expansion identity fails beyond the classical case; the command
     * reports it honestly. */
    r = run("verify generalized-expansion --s 6 --order 10");
    CHECK(r.exit_code == 2);
    CHECK(r.output.substr(0, 4) == "FAIL");

    CHECK(run("verify nosuch").exit_code == 1);
    CHECK(run("verify congruence-spot --family unknown").exit_code == 1);
}

TEST_CASE("export formats are byte exact") {
    RunResult r = run("export --sequence pod --n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "0 1\n1 1\n2 1\n3 2\n4 3\n5 4\n6 5\n7 7\n8 10\n9 13\n10 16\n");

    r = run("export --sequence d4k2 --n 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0 0\n1 0\n2 0\n3 1\n4 2\n5 2\n6 2\n7 3\n8 4\n");

    r = run("export --sequence d4k2 --n 0");
    CHECK(r.output == "0 0\n");
    r = run("export --sequence pod --n 0");
    CHECK(r.output == "0 1\n");

    r = run("export --sequence c6 --n 8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0,1\n1,1\n2,1\n3,2\n4,2\n5,3\n6,5\n7,6\n8,7\n");

    r = run("export --class modular --s 4 --n 8 --format plain");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n1\n2\n3\n4\n5\n7\n10\n");

    CHECK(run("export --n 4").exit_code == 1);
}

TEST_CASE("identical invocations are byte identical") {
    RunResult a = run("export --sequence c4t3 --n 30");
    RunResult b = run("export --sequence c4t3 --n 30");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    REQUIRE(!a.output.empty());
    CHECK(a.output.back() == '\n');

    RunResult t1 = run("table --class duplicate --s 4 --n 14 --k 7");
    RunResult t2 = run("table --class duplicate --s 4 --n 14 --k 7");
    CHECK(t1.output == t2.output);
}

TEST_CASE("golden table comparisons") {
    RunResult r = run("table --class duplicate --s 4 --n 14 --k 7 --golden");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("matches the reference") != std::string::npos);

    r = run("table --class modular --s 4 --n 20 --k 15 --golden");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("known misprint") != std::string::npos);

    r = run("table --class congruent --s 4 --n 20 --k 15 --golden");
    CHECK(r.exit_code == 0);

    CHECK(run("table --class modular --s 6 --n 10 --k 5 --golden")
              .exit_code == 1);
}

TEST_CASE("table csv output") {
    RunResult r = run("table --class duplicate --s 4 --n 5 --k 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,1,2,3\n1,1,0,0\n2,1,0,0\n3,1,1,0\n4,1,2,0\n"
                      "5,1,2,1\n");
}

TEST_CASE("truncation order environment variable") {
    std::string command = "QPART_ORDER=40 " + cli_path() +
                          " verify gauss 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 512> buffer{};
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output.find("order 40") != std::string::npos);
}
