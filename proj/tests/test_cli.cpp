#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "rowconvex/enumerate.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rowconvex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = rowconvex::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST(CliCount, Methods) {
    EXPECT_EQ(run({"count", "12", "--method", "dp"}).out, "212980\n");
    EXPECT_EQ(run({"count", "12"}).out, "212980\n");
    EXPECT_EQ(run({"count", "1", "--method", "oracle"}).out, "1\n");
    for (const char* m : {"partition", "composition", "recurrence", "gf", "oracle"}) {
        const auto r = run({"count", "9", "--method", m});
        EXPECT_EQ(r.status, 0) << m;
        EXPECT_EQ(r.out, "6466\n") << m;
    }
    EXPECT_EQ(run({"count", "30", "--method", "recurrence"}).out, run({"count", "30", "--method", "dp"}).out);
}

TEST(CliCount, Errors) {
    const auto over = run({"count", "30", "--method", "partition"});
    EXPECT_NE(over.status, 0);
    EXPECT_NE(over.err.find("partition formula"), std::string::npos);
    EXPECT_NE(over.err.find("limit 24"), std::string::npos);
    const auto oracle = run({"count", "13", "--method", "oracle"});
    EXPECT_NE(oracle.status, 0);
    EXPECT_NE(oracle.err.find("limit 12"), std::string::npos);
    EXPECT_NE(run({"count", "5", "--method", "abacus"}).status, 0);
    EXPECT_NE(run({"count", "0"}).status, 0);
    EXPECT_NE(run({"count", "5", "--method", "sorted-product"}).status, 0);
    EXPECT_EQ(run({"count", "5", "--method", "sorted-product", "--debug"}).status, 0);
    EXPECT_NE(run({}).status, 0);
}

TEST(CliCount, DumpShapes) {
    const auto r = run({"count", "3", "--method", "oracle", "--dump", "-"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 2), "6\n");
    const std::string shapes = r.out.substr(2);
    std::size_t blocks = 1;
    for (std::size_t i = 0; i + 1 < shapes.size(); ++i) blocks += shapes[i] == '\n' && shapes[i + 1] == '\n';
    EXPECT_EQ(blocks, 6U);
    EXPECT_NE(shapes.find("###\n"), std::string::npos);
}

TEST(CliTable, Csv) {
    const auto r = run({"table", "--to", "12", "--format", "csv"});
    EXPECT_EQ(r.out,
              "N,S_N\n1,1\n2,2\n3,6\n4,19\n5,61\n6,196\n7,629\n8,2017\n9,6466\n10,20727\n11,66441\n12,212980\n");
    const auto big = run({"table", "--to", "100", "--format", "csv"});
    const auto last = big.out.substr(big.out.rfind("100,"));
    EXPECT_EQ(last, "100," + rowconvex::count_by_linear_recurrence(100)[100].str() + "\n");
}

TEST(CliTable, JsonRoundTrip) {
    EXPECT_EQ(run({"table", "--to", "1", "--format", "json"}).out, "[{\"n\":1,\"s\":\"1\"}]\n");
    const auto r = run({"table", "--to", "60", "--format", "json"});
    const auto parsed = nlohmann::json::parse(r.out);
    EXPECT_EQ(parsed.dump() + "\n", r.out);
    EXPECT_EQ(parsed.size(), 60U);
    EXPECT_EQ(parsed[59]["s"], rowconvex::count_by_linear_recurrence(60)[60].str());
}

TEST(CliTable, Plain) {
    const auto r = run({"table", "--to", "3", "--format", "plain"});
    EXPECT_EQ(r.out, "N  S(N)\n1     1\n2     2\n3     6\n");
}

TEST(CliTable, UnwritableOutput) {
    const auto r = run({"table", "--to", "3", "--output", "/nonexistent-dir/x.csv"});
    EXPECT_NE(r.status, 0);
}

TEST(CliTable, WritesFile) {
    const std::string path = ::testing::TempDir() + "rowconvex_table.csv";
    ASSERT_EQ(run({"table", "--to", "4", "--format", "csv", "--output", path}).status, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), "N,S_N\n1,1\n2,2\n3,6\n4,19\n");
    std::remove(path.c_str());
}

TEST(CliVerify, PassesAndSkips) {
    const auto r = run({"verify", "--to", "12"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    const auto one = run({"verify", "--to", "1"});
    EXPECT_EQ(one.status, 0) << one.out;
    EXPECT_NE(one.out.find("SKIP"), std::string::npos);
}

TEST(CliVerify, FaultInjection) {
    const auto r = run({"verify", "--to", "12", "--inject-reference", "7=630"});
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.out.find("FAIL  reference table"), std::string::npos);
    EXPECT_NE(r.out.find("expected 630, actual 629"), std::string::npos);
}

TEST(CliBounds, Output) {
    EXPECT_EQ(run({"bounds", "1"}).out, "n = 1\nlower = 1\nexact = 1\nupper = 1\n");
    EXPECT_EQ(run({"bounds", "4", "--format", "json"}).out,
              "{\"exact\":\"12\",\"lower\":\"10\",\"n\":4,\"upper\":\"42\"}\n");
    EXPECT_NE(run({"bounds", "30"}).status, 0);
}

TEST(CliAsymptotics, Text) {
    const auto r = run({"asymptotics", "--terms", "200", "--digits", "10"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("growth constant 1/|x0|: 3.2055694304"), std::string::npos);
    EXPECT_NE(r.out.find("[inconsistent] x = 1 is a root"), std::string::npos);
    EXPECT_NE(r.out.find("equals -1"), std::string::npos);
    EXPECT_NE(r.out.find("equals 1/4"), std::string::npos);
}

TEST(CliAsymptotics, JsonIsDeterministic) {
    const auto a = run({"asymptotics", "--format", "json"});
    const auto b = run({"asymptotics", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["growth_constant"], "3.2055694304");
    EXPECT_EQ(j["claims"][0]["verdict"], "inconsistent");
}

TEST(CliGf, Coefficients) {
    EXPECT_EQ(run({"gf", "--order", "4"}).out, "0 1 2 6 19\n");
    EXPECT_EQ(run({"gf", "--order", "0"}).out, "0\n");
}
