#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string outFile = std::string(CLI_BIN_PATH) + ".out.tmp";
    const std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " > " + outFile + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = WEXITSTATUS(rc);
    std::ifstream in(outFile);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(outFile.c_str());
    return r;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exitCode == 2);
    CHECK(run("--branch bogus verify --level quick").exitCode == 2);
    CHECK(run("verify --level nonsense").exitCode == 2);
    CHECK(run("frobnicate").exitCode == 2);
}

TEST_CASE("quick verify passes and reports every check") {
    const RunResult r = run("--format json verify --level quick");
    CHECK(r.exitCode == 0);
    const json j = json::parse(r.out);
    CHECK(j["tool"] == "f4osc");
    CHECK(j["branch"] == "second");
    CHECK(j["overall"] == "pass");
    CHECK(j["critical_c"] == "-1/12");
    CHECK(j["parameters"]["a"] == "1/36");
    CHECK(j["parameters"]["c"] == "-1/12");
    bool sawJacobiSample = false;
    for (const auto& c : j["checks"]) {
        CHECK(c["status"] == "pass");
        if (c["name"] == "graded_jacobi_sample") sawJacobiSample = true;
        CHECK(!c.contains("elapsed_s"));  // timings only with --timings
    }
    CHECK(sawJacobiSample);
}

TEST_CASE("json reports validate against the published schema") {
    const RunResult r = run("--format json verify --level quick");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);

    std::ifstream schemaIn(std::string(SCHEMA_DIR) + "/report.schema.json");
    REQUIRE(schemaIn.good());
    const json schema = json::parse(schemaIn);

    // structural validation against the schema's required/type lists
    for (const auto& req : schema["required"]) CHECK(j.contains(req.get<std::string>()));
    const auto& props = schema["properties"];
    auto typeOk = [](const json& value, const std::string& type) {
        if (type == "string") return value.is_string();
        if (type == "array") return value.is_array();
        if (type == "object") return value.is_object();
        return true;
    };
    for (auto it = props.begin(); it != props.end(); ++it)
        if (j.contains(it.key()) && it.value().contains("type"))
            CHECK(typeOk(j[it.key()], it.value()["type"].get<std::string>()));
    const auto& checkProps = schema["properties"]["checks"]["items"];
    for (const auto& c : j["checks"]) {
        for (const auto& req : checkProps["required"]) CHECK(c.contains(req.get<std::string>()));
        CHECK((c["status"] == "pass" || c["status"] == "fail"));
    }
}

TEST_CASE("output is byte-identical across runs") {
    const RunResult a = run("--format json spectrum --depth 3");
    const RunResult b = run("--format json spectrum --depth 3");
    CHECK(a.exitCode == 0);
    CHECK(a.out == b.out);
    const RunResult c = run("--format json solve-closure");
    const RunResult d = run("--format json solve-closure");
    CHECK(c.out == d.out);
}

TEST_CASE("spectrum table at depth 3") {
    const RunResult r = run("--format json spectrum --depth 3");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["levels"].size() == 4);
    const char* energies[4] = {"2/3", "5/3", "8/3", "11/3"};
    const int degs[4] = {7, 8, 8, 8};
    for (int n = 0; n < 4; ++n) {
        CHECK(j["levels"][n]["energy"] == energies[n]);
        CHECK(j["levels"][n]["degeneracy"] == degs[n]);
    }
    // table format carries the same rows
    const RunResult t = run("spectrum --depth 3 --format table");
    CHECK(t.exitCode == 0);
    CHECK(t.out.find("2/3\t7") != std::string::npos);
    CHECK(t.out.find("11/3\t8") != std::string::npos);
}

TEST_CASE("solve-closure emits both branches") {
    const RunResult r = run("--format json solve-closure");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["branches"].size() == 2);
    CHECK(j["branches"][0]["branch"] == "first");
    CHECK(j["branches"][0]["annihilates_residuals"] == true);
    CHECK(j["branches"][1]["branch"] == "second");
    CHECK(j["branches"][1]["annihilates_residuals"] == true);
    CHECK(j["residual_generating_set_size"].get<int>() > 0);
}

TEST_CASE("lowest-weights rows") {
    const RunResult r = run("--format json lowest-weights");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["lowest_weights"].size() == 128);
    CHECK(j["distinct_states"] == 24);
    const auto& first = j["lowest_weights"][0];  // Ibar=0, slot 1
    CHECK(first["beta"] == "-7/6");
    CHECK(first["energy"] == "-2/3");
    CHECK(first["square_integrable"] == false);
    CHECK(first["norm_sign"] == "negative");
}

TEST_CASE("numerics single component") {
    const RunResult r = run("--format json numerics --component 1 --grid 400 --xmax 12");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);
    CHECK(j["components"].size() == 1);
    const auto& c = j["components"][0];
    CHECK(c["coupling"] == "91/72");
    CHECK(c["ladders"].size() == 1);
    CHECK(c["matches"][0]["within_tolerance"] == true);
}

TEST_CASE("dump subcommands emit JSON lines") {
    const RunResult r = run("dump-tensors");
    REQUIRE(r.exitCode == 0);
    int c3 = 0, c4 = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        if (j["tensor"] == "C3") ++c3;
        if (j["tensor"] == "C4") ++c4;
    }
    CHECK(c3 == 7 * 6);       // 7 lines x 3! orderings
    CHECK(c4 == 7 * 24);      // 7 quadruples x 4! orderings

    const RunResult g = run("dump-gammas");
    REQUIRE(g.exitCode == 0);
    int count = 0;
    std::istringstream glines(g.out);
    while (std::getline(glines, line)) {
        const json j = json::parse(line);
        ++count;
        if (j["name"] == "Gamma_9") {
            CHECK(j["entries"][0][0] == 1);
            CHECK(j["entries"][15][15] == -1);
        }
    }
    CHECK(count == 16);  // 7 small + 9 big
}

TEST_CASE("timings flag adds elapsed fields") {
    const RunResult r = run("--format json --timings verify --level quick");
    REQUIRE(r.exitCode == 0);
    const json j = json::parse(r.out);
    bool sawElapsed = false;
    for (const auto& c : j["checks"])
        if (c.contains("elapsed_s")) sawElapsed = true;
    CHECK(sawElapsed);
}
