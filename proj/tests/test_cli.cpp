#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "ska/parser.hpp"

using namespace ska;

namespace {

// run the built binary (tests execute from the build directory)
struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cli_args) {
    std::string cmd = "./ska " + cli_args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace

TEST_CASE("gb output re-parses to the same presentation") {
    auto res = run("gb --ideal gallery:minors:hankel:2x3");
    CHECK(res.exit_code == 0);
    IdealPresentation I = parse_ideal_text(res.output);
    CHECK(I.gens.size() == 3);
    IdealPresentation again = parse_ideal_text(I.to_text());
    CHECK(again.to_text() == I.to_text());
}

TEST_CASE("gb honors the order spec: the cubic appears") {
    auto res = run("gb --ideal gallery:minors:hankel:2x3 --order revlex:x3,x1,x2,x4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("x2^3") != std::string::npos);
}

TEST_CASE("koszul exit codes: certified=0, witness=1, inconclusive=2") {
    CHECK(run("koszul --ideal clebsch --mode exhaustive").exit_code == 0);
    CHECK(run("koszul --ideal gallery:pfaffians:5:4 --mode exhaustive").exit_code == 1);
    CHECK(run("koszul --ideal clebsch --mode theorem").exit_code == 2);
    CHECK(run("koszul --ideal gallery:minors:sym:3 --mode theorem").exit_code == 0);
    CHECK(run("koszul --ideal gallery:pfaffians:5:4 --mode sample:200 --seed 0").exit_code == 1);
}

TEST_CASE("universal exit codes and witness payload") {
    auto pass = run("universal --ideal gallery:minors:gen:2x3 --mode exhaustive");
    CHECK(pass.exit_code == 0);
    auto fail = run("universal --ideal gallery:minors:hankel:2x3 --mode exhaustive");
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("witness") != std::string::npos);
    // sampled runs never claim a proof
    auto sampled = run("universal --ideal gallery:minors:gen:3x3 --mode sample:25 --seed 1");
    CHECK(sampled.exit_code == 2);
}

TEST_CASE("identical invocations produce identical verdict payloads") {
    std::string cmd = "koszul --ideal gallery:cycle:5 --mode exhaustive --jobs 2";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    // strip the wall-time line before comparing
    auto strip_time = [](std::string s) {
        auto pos = s.find("wall_time_s");
        REQUIRE(pos != std::string::npos);
        auto end = s.find('\n', pos);
        s.erase(pos, end - pos);
        return s;
    };
    CHECK(strip_time(a.output) == strip_time(b.output));

    std::string sampled = "universal --ideal gallery:minors:gen:3x3 --mode sample:20 --seed 9";
    CHECK(strip_time(run(sampled).output) == strip_time(run(sampled).output));
}

TEST_CASE("obstruction command") {
    CHECK(run("obstruction --ideal clebsch").exit_code == 0);
    std::ofstream f("cli_test_incl.ideal");
    f << "vars: x, y\nfield: QQ\nx^2\nx*y\n";
    f.close();
    CHECK(run("obstruction --ideal cli_test_incl.ideal").exit_code == 2);
    std::remove("cli_test_incl.ideal");
}

TEST_CASE("apolar command from a dual file") {
    std::ofstream f("cli_test_form.dual");
    f << "dualvars: X, Y\nfield: QQ\nX*Y\n";
    f.close();
    auto res = run("apolar --dual cli_test_form.dual");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("x^2") != std::string::npos);
    CHECK(res.output.find("y^2") != std::string::npos);
    std::remove("cli_test_form.dual");
}

TEST_CASE("apolar named modules") {
    auto res = run("apolar --module clebsch");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"socle_degree\": 3") != std::string::npos);
    CHECK(res.output.find("\"type\": 1") != std::string::npos);
    CHECK(res.output.find("x^2 - y*z") != std::string::npos);
    CHECK(run("apolar --module cycle:5").exit_code == 0);
    CHECK(run("apolar --module symdet").exit_code == 0);
}

TEST_CASE("gallery printing and lines27") {
    auto res = run("gallery clebsch");
    CHECK(res.exit_code == 0);
    IdealPresentation I = parse_ideal_text(res.output);
    CHECK(I.gens.size() == 6);

    auto lines = run("gallery lines27");
    CHECK(lines.exit_code == 0);
    CHECK(lines.output.find("incidence lemma: holds") != std::string::npos);
}

TEST_CASE("usage errors exit with 3") {
    CHECK(run("koszul --ideal no_such_file_or_gallery").exit_code == 3);
    CHECK(run("gb --ideal clebsch --order revlex:x,y").exit_code == 3);
    CHECK(run("koszul --ideal clebsch --mode bogus").exit_code == 3);
    CHECK(run("universal --ideal gallery:minors:gen:2x5 --mode exhaustive").exit_code == 3);
}

TEST_CASE("verify with an unknown filter warns and exits 0") {
    auto res = run("verify --filter zzz-no-such-check");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("warning") != std::string::npos);
}

TEST_CASE("verify runs a named check") {
    auto res = run("verify --filter 1-tidy --jobs 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("[PASS] 1-tidy-gap-remark") != std::string::npos);
}

TEST_CASE("verdict payloads do not depend on --jobs") {
    auto strip_time = [](std::string s) {
        auto pos = s.find("wall_time_s");
        REQUIRE(pos != std::string::npos);
        auto end = s.find('\n', pos);
        s.erase(pos, end - pos);
        return s;
    };
    auto one = run("koszul --ideal gallery:minors:sym:3 --mode exhaustive --jobs 1");
    auto two = run("koszul --ideal gallery:minors:sym:3 --mode exhaustive --jobs 2");
    CHECK(one.exit_code == 0);
    CHECK(strip_time(one.output) == strip_time(two.output));

    auto u1 = run("universal --ideal gallery:minors:hankel:2x4 --mode exhaustive --jobs 1");
    auto u2 = run("universal --ideal gallery:minors:hankel:2x4 --mode exhaustive --jobs 2");
    CHECK(u1.exit_code == 1);
    CHECK(strip_time(u1.output) == strip_time(u2.output));
}

TEST_CASE("prime field end to end") {
    auto res = run("gb --ideal gallery:cycle:5 --field \"GF(32003)\"");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("field: GF(32003)") != std::string::npos);
    IdealPresentation I = parse_ideal_text(res.output);
    CHECK(I.ring->field().characteristic() == 32003);
}
