#include "cea/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cea;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden_path(const std::string &name)
{
    return std::string(CEA_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string &path)
{
    std::ifstream f(path);
    EXPECT_TRUE(f.good()) << path;
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, AlgebraInfo)
{
    auto r = run({"algebra", "info", "--name", "so5"});
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["dim"], 10);
    EXPECT_EQ(j["rep_dim"], 5);
    EXPECT_EQ(j["basis_labels"].size(), 10u);
    EXPECT_FALSE(j["manifest"]["fingerprint"].get<std::string>().empty());

    auto g2 = run({"algebra", "info", "--name", "g2"});
    ASSERT_EQ(g2.code, 0);
    Json jg = Json::parse(g2.out);
    EXPECT_EQ(jg["dim"], 14);
    EXPECT_EQ(jg["rep_dim"], 7);
    EXPECT_EQ(jg["relations"].size(), 35u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"algebra", "info", "--name", "e8"}).code, 2);
    EXPECT_EQ(run({"algebra", "info"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    auto r = run({"algebra", "info", "--bogus-flag", "x"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, OmegaTableMatchesGolden)
{
    auto r = run({"omega", "table", "--k", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    Json head = Json::parse(first);
    EXPECT_EQ(head["k"], 3);
    EXPECT_EQ(head["nonzero_count"], 42);
    std::ostringstream rest;
    rest << lines.rdbuf();
    EXPECT_EQ(rest.str(), read_file(golden_path("omega3_table.jsonl")));
}

TEST(Cli, OmegaTableOrderTwo)
{
    auto r = run({"omega", "table", "--k", "2"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line); // manifest
    int count = 0;
    while (std::getline(lines, line)) {
        Json j = Json::parse(line);
        ASSERT_EQ(j["idx"].size(), 2u);
        EXPECT_EQ(j["idx"][0], j["idx"][1]);
        EXPECT_EQ(j["val"], -1);
        ++count;
    }
    EXPECT_EQ(count, 7);
}

TEST(Cli, VerifyInvariantFamilies)
{
    EXPECT_EQ(run({"poly", "verify-invariant", "--algebra", "so4", "--family", "pf"}).code, 0);
    EXPECT_EQ(run({"poly", "verify-invariant", "--algebra", "so5", "--family", "trace"}).code, 0);
    EXPECT_EQ(
        run({"poly", "verify-invariant", "--algebra", "so4", "--family", "ck", "--k", "2"}).code,
        0);
    EXPECT_EQ(run({"poly", "verify-invariant", "--algebra", "g2", "--family", "g", "--row", "3",
                   "--col", "3"})
                  .code,
              0);

    // falsified claim: the pfaffian is not gl-invariant; exit 1 with witness
    auto r = run({"poly", "verify-invariant", "--algebra", "gl4", "--family", "pf"});
    EXPECT_EQ(r.code, 1);
    Json j = Json::parse(r.out);
    EXPECT_FALSE(j["invariant"].get<bool>());
    EXPECT_FALSE(j["witness"].is_null());
}

TEST(Cli, VerifyInvariantGraphInput)
{
    const std::string path = "cli_trace_graph.json";
    {
        std::ofstream f(path);
        f << R"({"vertices":[{"color":"white"}],"edges":[{"tail":0,"head":0}]})";
    }
    auto r = run({"poly", "verify-invariant", "--algebra", "so3", "--family", "graph", "--graph",
                  path});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["invariant"].get<bool>());
    std::remove(path.c_str());
}

TEST(Cli, ElementBuildPfaffian)
{
    auto r = run({"element", "build", "--family", "pf", "--params", R"({"N":4})"});
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["verdict"]["central"].get<bool>());
    EXPECT_EQ(j["element"]["terms"].size(), 3u); // three degree-2 symmetrized terms
    for (const auto &t : j["element"]["terms"]) EXPECT_EQ(t["monomial"].size(), 2u);
}

TEST(Cli, ElementBuildAndVerifyRoundTrip)
{
    auto build = run({"element", "build", "--family", "casimir", "--params",
                      R"({"algebra":"so4"})"});
    ASSERT_EQ(build.code, 0);
    const std::string path = "cli_casimir_so4.json";
    {
        std::ofstream f(path);
        f << build.out;
    }
    auto verify = run({"element", "verify-central", "--in", path});
    EXPECT_EQ(verify.code, 0);
    Json j = Json::parse(verify.out);
    EXPECT_TRUE(j["central"].get<bool>());
    std::remove(path.c_str());
}

TEST(Cli, VerifyCentralRejectsNonCentral)
{
    const std::string path = "cli_single_generator.json";
    {
        std::ofstream f(path);
        f << R"({"algebra":"so3","terms":[{"monomial":[0],"coeff":"1"}]})";
    }
    auto r = run({"element", "verify-central", "--in", path});
    EXPECT_EQ(r.code, 1);
    Json j = Json::parse(r.out);
    EXPECT_FALSE(j["central"].get<bool>());
    EXPECT_FALSE(j["witness"].is_null());
    std::remove(path.c_str());
}

TEST(Cli, ElementGoldenCasimirSo3)
{
    auto r = run({"element", "build", "--family", "casimir", "--params",
                  R"({"algebra":"so3"})"});
    ASSERT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    Json golden = Json::parse(read_file(golden_path("casimir_so3_element.json")));
    EXPECT_EQ(j["element"], golden);
}

TEST(Cli, G2GLongGuard)
{
    auto refused = run({"element", "build", "--family", "g2G", "--params",
                        R"({"row":[7],"col":[7]})"});
    EXPECT_EQ(refused.code, 2);
    EXPECT_NE(refused.err.find("--allow-long"), std::string::npos);
    // vanishing orders bypass the guard: the sum is empty
    auto zero = run({"element", "build", "--family", "g2G", "--params",
                     R"({"row":[7],"col":[2,5]})"});
    EXPECT_EQ(zero.code, 0);
    Json j = Json::parse(zero.out);
    EXPECT_EQ(j["element"]["terms"].size(), 0u);
}

TEST(Cli, RelationsCheck)
{
    for (const std::string id : {"1", "2", "3", "4", "charpoly"})
        EXPECT_EQ(run({"relations", "check", "--id", id}).code, 0) << id;
    auto r = run({"relations", "check", "--id", "charpoly", "--n", "6"});
    EXPECT_EQ(r.code, 0);
    // falsified literal reading: relation 4 at N=6 exits 1 with the note
    auto bad = run({"relations", "check", "--id", "4", "--n", "6", "--k", "3"});
    EXPECT_EQ(bad.code, 1);
    Json j = Json::parse(bad.out);
    EXPECT_NE(j["note"].get<std::string>().find("sign"), std::string::npos);
    EXPECT_EQ(run({"relations", "check", "--id", "9"}).code, 2);
}

TEST(Cli, SelftestPasses)
{
    auto r = run({"selftest"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_GT(j["checks"].size(), 10u);
}

TEST(Cli, DeterministicOutput)
{
    auto a = run({"element", "build", "--family", "sumpf2", "--params", R"({"N":5,"k":2})"});
    auto b = run({"element", "build", "--family", "sumpf2", "--params", R"({"N":5,"k":2})"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);

    auto s1 = run({"selftest", "--seed", "7"});
    auto s2 = run({"selftest", "--seed", "7"});
    EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, ThreadCountDoesNotChangeResults)
{
    // identical up to the echoed command line inside the manifest
    auto strip_command = [](const std::string &s) {
        Json j = Json::parse(s);
        j["manifest"].erase("command");
        return j;
    };
    auto one = run({"--threads", "1", "element", "build", "--family", "g2G", "--params",
                    R"({"row":[3],"col":[3]})"});
    auto four = run({"--threads", "4", "element", "build", "--family", "g2G", "--params",
                     R"({"row":[3],"col":[3]})"});
    EXPECT_EQ(one.code, four.code);
    EXPECT_EQ(strip_command(one.out), strip_command(four.out));

    auto i1 = run({"--threads", "1", "poly", "verify-invariant", "--algebra", "g2", "--family",
                   "g", "--row", "4", "--col", "4"});
    auto i4 = run({"--threads", "4", "poly", "verify-invariant", "--algebra", "g2", "--family",
                   "g", "--row", "4", "--col", "4"});
    EXPECT_EQ(i1.code, 0);
    EXPECT_EQ(strip_command(i1.out), strip_command(i4.out));

    // the global flag is accepted after the subcommand as well
    auto trailing = run({"algebra", "info", "--name", "so3", "--threads", "2"});
    EXPECT_EQ(trailing.code, 0);
}

TEST(Cli, BenchRuns)
{
    auto r = run({"bench"});
    EXPECT_EQ(r.code, 0);
    Json j = Json::parse(r.out);
    for (const auto &b : j["benchmarks"]) EXPECT_TRUE(b["ok"].get<bool>());
    EXPECT_FALSE(r.err.empty()); // timings live on stderr
}
