#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "bfi/io.hpp"
#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BFI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_tmp_") + name;
}

void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

const char* kExampleBicap = R"({"n":2,"entries":[
  {"pos":[1],"neg":[2],"value":0.2},
  {"pos":[2],"neg":[1],"value":-0.2},
  {"pos":[1],"neg":[],"value":0.5},
  {"pos":[2],"neg":[],"value":0.4},
  {"pos":[],"neg":[1],"value":-0.6},
  {"pos":[],"neg":[2],"value":-0.3}]})";

} // namespace

TEST_CASE("score reproduces the worked example values") {
    write(temp_path("mb.json"), kExampleBicap);
    write(temp_path("alts.csv"), "id,c1,c2\na,0.8,-0.5\n");
    std::string base = "score --carrier " + temp_path("mb.json") + " --alternatives " +
                       temp_path("alts.csv") + " --polarity bipolar --integral ";

    RunResult ch = run_cli(base + "choquet");
    CHECK(ch.exit_code == 0);
    CHECK(ch.output.find("a\t0.25") != std::string::npos);
    RunResult sh = run_cli(base + "shilkret");
    CHECK(sh.exit_code == 0);
    CHECK(sh.output.find("a\t0.4") != std::string::npos);
    RunResult su = run_cli(base + "sugeno");
    CHECK(su.exit_code == 0);
    CHECK(su.output.find("a\t0.5") != std::string::npos);

    RunResult js = run_cli(base + "choquet --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"value\": 0.25") != std::string::npos);
}

TEST_CASE("constant rows score to the constant") {
    write(temp_path("mb.json"), kExampleBicap);
    write(temp_path("const.csv"), "id,c1,c2\nk,0.3,0.3\n");
    RunResult r = run_cli("score --carrier " + temp_path("mb.json") + " --alternatives " +
                          temp_path("const.csv") + " --polarity bipolar --integral sugeno");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k\t0.3") != std::string::npos);
}

TEST_CASE("rank orders by descending value with stable ties") {
    write(temp_path("mb.json"), kExampleBicap);
    write(temp_path("rank.csv"), "id,c1,c2\na,0.8,-0.5\nb,0.5,0.5\n");
    RunResult r = run_cli("rank --carrier " + temp_path("mb.json") + " --alternatives " +
                          temp_path("rank.csv") + " --polarity bipolar --integral choquet");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1\tb\t0.5") != std::string::npos);
    CHECK(r.output.find("2\ta\t0.25") != std::string::npos);

    write(temp_path("empty.csv"), "id,c1,c2\n");
    RunResult e = run_cli("rank --carrier " + temp_path("mb.json") + " --alternatives " +
                          temp_path("empty.csv") + " --polarity bipolar --integral choquet");
    CHECK(e.exit_code == 0);
}

TEST_CASE("error mapping to exit codes") {
    write(temp_path("bad.json"), "{oops");
    write(temp_path("alts.csv"), "id,c1,c2\na,0.8,-0.5\n");
    RunResult parse = run_cli("score --carrier " + temp_path("bad.json") +
                              " --alternatives " + temp_path("alts.csv") +
                              " --polarity bipolar --integral choquet");
    CHECK(parse.exit_code == 1);

    write(temp_path("mb.json"), kExampleBicap);
    write(temp_path("wide.csv"), "id,c1,c2,c3\na,0.1,0.2,0.3\n");
    RunResult dim = run_cli("score --carrier " + temp_path("mb.json") + " --alternatives " +
                            temp_path("wide.csv") + " --polarity bipolar --integral choquet");
    CHECK(dim.exit_code == 2);

    write(temp_path("off.csv"), "id,c1,c2\na,1.5,0.0\n");
    RunResult scale = run_cli("score --carrier " + temp_path("mb.json") +
                              " --alternatives " + temp_path("off.csv") +
                              " --polarity bipolar --integral choquet");
    CHECK(scale.exit_code == 2);

    RunResult flags = run_cli("score --integral choquet");
    CHECK(flags.exit_code == 1);
}

TEST_CASE("check-axioms passes the example suite and fails the mean demo") {
    write(temp_path("mb.json"), kExampleBicap);
    RunResult pass = run_cli("check-axioms --carrier " + temp_path("mb.json") +
                             " --polarity bipolar --integral sugeno --trials 150");
    CHECK(pass.exit_code == 0);
    CHECK(pass.output.find("suite: pass") != std::string::npos);

    RunResult fail = run_cli(
        "check-axioms --integral mean --n 3 --trials 50 --axiom bipolar-min-stability");
    CHECK(fail.exit_code == 4);
    CHECK(fail.output.find("FAIL") != std::string::npos);
    CHECK(fail.output.find("trial") != std::string::npos);
}

TEST_CASE("elicit writes a byte-equivalent canonical carrier") {
    write(temp_path("mb.json"), kExampleBicap);
    std::string out = temp_path("elicited.json");
    RunResult r = run_cli("elicit --carrier " + temp_path("mb.json") +
                          " --polarity bipolar --integral choquet --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("exact-roundtrip: true") != std::string::npos);

    std::ifstream f(out, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(text ==
          bfi::serialize_bicapacity(bfi::parse_bicapacity(kExampleBicap, "expected")));
}
