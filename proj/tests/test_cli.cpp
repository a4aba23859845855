// Drives the installed CLI binary end to end: exit-code contract, JSON
// output, and byte determinism of repeated invocations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PISYS_CLI_PATH
#error "PISYS_CLI_PATH must point at the pisys binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PISYS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

using nlohmann::json;

}  // namespace

TEST_CASE("build B3 as json") {
    RunResult r = run("--format json build B3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["label"] == "B3");
    CHECK(j["roots"].size() == 18);
    CHECK(j["simple"].size() == 3);
}

TEST_CASE("build in text mode shows the diagram") {
    RunResult r = run("build G2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("12 roots") != std::string::npos);
    CHECK(r.out.find("#") != std::string::npos);  // triple bond
}

TEST_CASE("extend rejects the B4 Y-branch with the short-root obstruction") {
    RunResult r = run(R"(--format json extend '{"ambient":"B4","roots":[[1,-1,0,0],[0,1,-1,0],[-1,-1,0,0]]}')");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["extendable"] == false);
    CHECK(j["obstruction"] == json::array({0, 0, -1, 0}));
    CHECK(j["closure_type"] == "A3");
    CHECK(j["span_type"] == "B3");
    CHECK(j["closure"]["integer_roots"].size() == 12);
    CHECK(j["closure"]["rational_roots"].size() == 18);
}

TEST_CASE("extend accepts the B4 chain") {
    RunResult r = run(R"(--format json extend '{"ambient":"B4","roots":[[1,-1,0,0],[0,1,-1,0],[0,0,1,-1]]}')");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["extendable"] == true);
    CHECK(j["witness_basis"].size() == 4);
}

TEST_CASE("check flags the C3 counterexample and accepts it in B3") {
    RunResult c3 = run(R"(--format json check '{"ambient":"C3","roots":[[1,-1,0],[0,1,-1],[-1,-1,0]]}')");
    CHECK(c3.exit_code == 1);
    json j = json::parse(c3.out);
    CHECK(j["ok"] == false);
    CHECK(j["verdict"] == "difference-is-root");
    CHECK(j["difference"] == json::array({2, 0, 0}));

    RunResult b3 = run(R"(--format json check '{"ambient":"B3","roots":[[1,-1,0],[0,1,-1],[-1,-1,0]]}')");
    CHECK(b3.exit_code == 0);
    CHECK(json::parse(b3.out)["ok"] == true);
}

TEST_CASE("closure and classify") {
    RunResult c = run(R"(--format json closure '{"ambient":"B3","roots":[[1,-1,0],[0,1,-1],[-1,-1,0]]}')");
    CHECK(c.exit_code == 0);
    json cj = json::parse(c.out);
    CHECK(cj["integer_roots"].size() == 12);
    CHECK(cj["rational_roots"].size() == 18);
    CHECK(cj["span_rank"] == 3);

    RunResult k = run(R"(--format json classify '{"ambient":"B3","roots":[[1,-1,0],[0,1,-1],[-1,-1,0]]}')");
    CHECK(k.exit_code == 0);
    CHECK(json::parse(k.out)["shape"]["name"] == "A3");

    RunResult bare = run(R"(--format json classify '[[1,-1,0,0],[0,1,-1,0]]')");
    CHECK(bare.exit_code == 0);
    CHECK(json::parse(bare.out)["shape"]["name"] == "A2");
}

TEST_CASE("transform") {
    RunResult r = run(R"(--format json transform '{"ambient":"B3","roots":[[1,-1,0],[0,1,-1],[0,0,1]]}' --target A3)");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "found");
    CHECK(j["steps"].size() == 1);

    RunResult none = run(R"(transform '{"ambient":"A2","roots":[[1,-1,0],[0,1,-1]]}' --target B2)");
    CHECK(none.exit_code == 1);
}

TEST_CASE("scan-lemma small") {
    RunResult r = run("--format json scan-lemma --max-rank 3 --max-depth 1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["subsystem_type"] == "A3");
    CHECK(j["entries"][0]["ambient_type"] == "B3");
    CHECK(j["entries"][1]["subsystem_type"] == "A2");
    CHECK(j["entries"][1]["ambient_type"] == "G2");
}

TEST_CASE("verify sampled, seeded") {
    RunResult r = run("--format json verify B4 --target A3 --samples 50 --seed 9");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["total_checked"] == 50);
    CHECK(j["criterion_mismatches"] == 0);
    CHECK(j["mode"]["prng"] == "splitmix64");
}

TEST_CASE("negative verdicts carry the witness on stdout") {
    RunResult r = run(R"(--format json closure '{"ambient":"C3","roots":[[1,-1,0],[0,1,-1],[-1,-1,0]]}')");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["difference"] == json::array({2, 0, 0}));

    // two roots at a sharp angle do not form a simple-system diagram
    RunResult k = run(R"(--format json classify '[[1,-1,0],[1,0,-1]]')");
    CHECK(k.exit_code == 1);
    CHECK(json::parse(k.out)["classifiable"] == false);
}

TEST_CASE("sampled verify covers both orbits in B4") {
    RunResult r = run("--format json verify B4 --target A3 --samples 60 --seed 3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["criterion_mismatches"] == 0);
    CHECK(j["extendable_count"].get<int>() > 0);
    CHECK(j["failing_count"].get<int>() > 0);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("build Z9").exit_code == 2);
    CHECK(run("build E9").exit_code == 2);
    CHECK(run(R"(check '{"ambient":"B3","roots":[[1,-1]]}')").exit_code == 2);  // bad dimension
    CHECK(run(R"(check '{"ambient":"B3"})").exit_code == 2);                    // malformed JSON
    CHECK(run(R"(check '{"ambient":"B3","roots":[[0.5,0,0]]}')").exit_code == 2);  // floats rejected
    CHECK(run("check /no/such/file.json").exit_code == 2);
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const char* args : {"--format json build E8",
                             "--format json verify B3 --target A2 --samples 40 --seed 5",
                             "--format json scan-lemma --max-rank 4 --max-depth 2"}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
