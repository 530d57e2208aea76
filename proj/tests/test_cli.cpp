#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ALTMAP_CLI_PATH
#error "ALTMAP_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + std::string(ALTMAP_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("json output is well-formed and deterministic")
{
    std::string args = "solve --m 3 --d 1 --t-order 6 --x-order 3";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto j = nlohmann::json::parse(a.out);
    CHECK(j["meta"]["command"] == "solve");
    CHECK(j["meta"]["index_names"] == nlohmann::json({"t", "x1"}));
    REQUIRE(!j["rows"].empty());
    for (auto& row : j["rows"]) {
        CHECK(row["index"].is_array());
        CHECK(row["num"].is_string());
        CHECK(row["den"].is_string());
    }
    // V = t + 2 t^2 x1 + 8 t^3 x1^2 + ...
    CHECK(j["rows"][0]["index"] == nlohmann::json({1, 0}));
    CHECK(j["rows"][0]["num"] == "1");
    CHECK(j["rows"][1]["num"] == "2");
    CHECK(j["rows"][2]["num"] == "8");
}

TEST_CASE("csv output carries the same rows")
{
    RunResult r = run("eulerian --series Z --z-order 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("# command=eulerian", 0) == 0);
    CHECK(r.out.find("z,num,den") != std::string::npos);
    CHECK(r.out.find("1,5,4") != std::string::npos); // Z(1) = 5/4
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run("").exit_code == 2);
    CHECK(run("solve --no-such-flag").exit_code == 2);
    CHECK(run("solve --m 1").exit_code == 2);
    CHECK(run("oracle --max-edges 7").exit_code == 2);
    CHECK(run("oracle --max-edges 2 --boundary xyz").exit_code == 2);
}

TEST_CASE("help exits cleanly")
{
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("verify suite passes and exits zero")
{
    RunResult r = run("verify --m 3 --d 1 --t-order 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("kernel-identities: ok") != std::string::npos);
}

TEST_CASE("oracle counts match known small values")
{
    RunResult r = run("oracle --max-edges 3 --boundary \"\"");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    // Rooted maps with e edges: 1, 2, 9, 54 summed over profiles.
    long totals[4] = {0, 0, 0, 0};
    for (auto& row : j["rows"]) {
        int e = row["index"][0];
        totals[e] += std::stol(row["num"].get<std::string>());
    }
    CHECK(totals[0] == 1);
    CHECK(totals[1] == 2);
    CHECK(totals[2] == 9);
    CHECK(totals[3] == 54);
}

TEST_CASE("output directory override writes the same bytes")
{
    std::string dir = "cli_out_dir";
    std::filesystem::create_directories(dir);
    std::remove((dir + "/table.json").c_str());
    std::string args = "eulerian --series B --t-order 4 --z-order 3";
    RunResult direct = run(args);
    RunResult filed = run(args + " --output table.json", "ALTMAP_OUTPUT_DIR=" + dir);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(dir + "/table.json", std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
}
