#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <parkhopf/cli/run.hpp>

using parkhopf::io::Json;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "parkhopf");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = parkhopf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        unsetenv("PARKHOPF_MAX_N");
    }
    void TearDown() override
    {
        unsetenv("PARKHOPF_MAX_N");
    }
};

} // namespace

TEST_F(Cli, PolyQn)
{
    const auto r = run({"poly", "--which", "qn", "--n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "24,58,37,6\n");
}

TEST_F(Cli, PolyFormats)
{
    EXPECT_EQ(run({"poly", "--which", "pn-t", "--n", "3"}).out, "5,10,6,1\n");
    EXPECT_EQ(run({"poly", "--which", "narayana", "--n", "3"}).out, "1,3,1\n");
    EXPECT_EQ(run({"poly", "--which", "pn-alpha", "--n", "2"}).out, "0,1,3\n");
    EXPECT_EQ(run({"poly", "--which", "super-narayana", "--n", "2"}).out, "2,1\n3,3\n1,2\n");
    const auto j = Json::parse(run({"poly", "--which", "qn", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j["schema"], "parkhopf/1");
    EXPECT_EQ(j["value"]["coefficients"], Json::parse(R"(["6","8","2"])"));
}

TEST_F(Cli, Bijection)
{
    const auto tree = run({"bijection", "--direction", "ndpf-to-tree", "--input", "1133444"});
    EXPECT_EQ(tree.code, 0);
    EXPECT_EQ(tree.out, "((.,(.,.)),((.,.),(.,(.,.))))\n");
    EXPECT_EQ(run({"bijection", "--direction", "tree-to-ndpf", "--input", "((.,(.,.)),((.,.),(.,(.,.))))"}).out,
              "1133444\n");
    EXPECT_EQ(run({"bijection", "--direction", "dyck-encode", "--input", "uuududdudd"}).out, "11124\n");
    EXPECT_EQ(run({"bijection", "--direction", "schroder-encode", "--input", "uuhuddhd"}).out, "1,1,-1,2,-4\n");
}

TEST_F(Cli, SeriesG)
{
    const auto r = run({"series", "--which", "g", "--degree", "4"});
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["components"].size(), 5u);
    const auto &g4 = j["components"][4]["element"];
    EXPECT_EQ(g4["basis"], "S");
    // 14 = sum of the coefficients of g_4, one per nondecreasing parking function.
    long total = 0;
    for (const auto &term : g4["terms"]) {
        total += std::stol(term["coeff"].get<std::string>());
    }
    EXPECT_EQ(total, 14);
    EXPECT_EQ(g4["terms"].size(), 8u);
}

TEST_F(Cli, SeriesInNoncommutativeBases)
{
    const auto g = Json::parse(run({"series", "--which", "G", "--degree", "3"}).out);
    EXPECT_EQ(g["components"][3]["element"]["terms"].size(), 5u);
    const auto x = Json::parse(run({"series", "--which", "X", "--degree", "3"}).out);
    EXPECT_EQ(x["components"][3]["element"]["terms"].size(), 6u);
    const auto f = Json::parse(run({"series", "--which", "f", "--degree", "2"}).out);
    EXPECT_EQ(f["components"][2]["element"]["terms"].size(), 2u);
}

TEST_F(Cli, Enumerate)
{
    const auto lines = run({"enumerate", "--family", "ndpf", "--n", "3"});
    EXPECT_EQ(lines.out, "111\n112\n113\n122\n123\n");
    const auto j = Json::parse(run({"enumerate", "--family", "qribbon", "--n", "3", "--format", "json"}).out);
    EXPECT_EQ(j["count"], 11);
    const auto csv = run({"enumerate", "--family", "signed-pf", "--n", "2", "--format", "csv"}).out;
    EXPECT_EQ(csv.substr(0, 11), "index,item\n");
    EXPECT_NE(csv.find("\"1,-1\""), std::string::npos);
    EXPECT_EQ(run({"enumerate", "--family", "schroder", "--n", "1"}).out, "h\nud\n");
}

TEST_F(Cli, Tables)
{
    EXPECT_EQ(run({"table", "--which", "qn-triangle", "--n-max", "2"}).out, "n,k,value\n1,0,1\n2,0,2\n2,1,1\n");
    const auto j = Json::parse(run({"table", "--which", "bar-distribution", "--n-max", "3", "--format", "json"}).out);
    EXPECT_EQ(j["rows"][2]["coefficients"], Json::parse(R"(["5","5","1"])"));
}

TEST_F(Cli, VerifyIsDeterministic)
{
    const auto a = run({"verify", "--suite", "all", "--max-n", "5"});
    const auto b = run({"verify", "--suite", "all", "--max-n", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_GT(j["checks"].size(), 50u);
}

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"poly", "--which", "nope", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "pf"}).code, 2);
    EXPECT_EQ(run({"bijection", "--direction", "ndpf-to-tree", "--input", "21"}).code, 2);
    EXPECT_EQ(run({"bijection", "--direction", "dyck-encode", "--input", "udd"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "pf", "--n", "-1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, SizeCap)
{
    EXPECT_EQ(run({"enumerate", "--family", "perm", "--n", "9"}).code, 2);
    setenv("PARKHOPF_MAX_N", "3", 1);
    EXPECT_EQ(run({"enumerate", "--family", "perm", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "perm", "--n", "3"}).code, 0);
    setenv("PARKHOPF_MAX_N", "x", 1);
    EXPECT_EQ(run({"enumerate", "--family", "perm", "--n", "3"}).code, 2);
}
