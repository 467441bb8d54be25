#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "slackcomm/cli.hpp"
#include "slackcomm/csv.hpp"

using slackcomm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, SlackWritesCsvFile) {
  const auto r = call({"slack", "--family", "spanning-tree", "--n", "4", "--out", "cli_s.csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = slackcomm::read_csv_file("cli_s.csv");
  EXPECT_EQ(m.rows(), 15u);
  EXPECT_EQ(m.cols(), 16u);
}

TEST(Cli, VerifySpanningTree) {
  const auto r = call({"verify", "--protocol", "spanning-tree", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: 240/240 pairs exact\n");
}

TEST(Cli, VerifyWithSimulation) {
  const auto r = call({"verify", "--protocol", "claw-free", "--graph", "path", "--n", "4",
                       "--simulate", "50", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("simulate: 50 samples per pair, seed 3"), std::string::npos);
}

TEST(Cli, ReduceSpanningTree) {
  const auto r = call({"reduce", "--target", "st", "--n", "2", "--A", "1", "--B", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "ell = 5\n"
            "U = {3,5}\n"
            "T = {{1,5},{2,4},{2,5},{3,5}}\n"
            "slack = 0\n"
            "DISJ = 1\n");
}

TEST(Cli, ReducePerfectMatching) {
  const auto r = call({"reduce", "--target", "pm", "--n", "1", "--A", "1", "--B", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("M = {{1,2},{3,5},{4,6},{7,8}}"), std::string::npos);
  EXPECT_NE(r.out.find("slack = 2\nDISJ = 0"), std::string::npos);
}

TEST(Cli, ProtocolFileRoundTrip) {
  ASSERT_EQ(call({"protocol", "--name", "spanning-tree", "--n", "3", "--out", "cli_t.txt"}).code, 0);
  ASSERT_EQ(call({"slack", "--family", "spanning-tree", "--n", "3", "--out", "cli_s3.csv"}).code, 0);
  const auto r = call({"verify", "--protocol-file", "cli_t.txt", "--matrix", "cli_s3.csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: 21/21 pairs exact\n");
}

TEST(Cli, VerifyFileMismatchExitsOne) {
  ASSERT_EQ(call({"protocol", "--name", "spanning-tree", "--n", "3", "--out", "cli_t2.txt"}).code, 0);
  std::ofstream("cli_bad.csv") << ",T:12.13,T:12.23,T:13.23\nU:1,0,0,0\nU:2,0,0,0\nU:3,0,0,0\n"
                                  "U:1-2,0,0,0\nU:1-3,0,0,0\nU:2-3,0,0,0\nU:1-2-3,0,0,0\n";
  const auto bad = call({"verify", "--protocol-file", "cli_t2.txt", "--matrix", "cli_bad.csv"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "FAIL: row U:1-2 col T:13.23 expected 0 got 1\n");
}

TEST(Cli, ConvertBothDirections) {
  ASSERT_EQ(call({"convert", "--protocol", "spanning-tree", "--n", "3", "--out", "cli_f.txt"}).code,
            0);
  EXPECT_EQ(slurp("cli_f.txt").rfind("factorization rank=54\n", 0), 0u);
  const auto r = call({"convert", "--factorization", "cli_f.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("protocol\n", 0), 0u);
}

TEST(Cli, CoverListsMembers) {
  const auto r = call({"cover", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("X:1-2\nX:1-3\nsize 2, covers 3/3 matchings", 0), 0u) << r.out;
}

TEST(Cli, ExtendReportsSummary) {
  const auto r = call({"extend", "--family", "spanning-tree", "--n", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("extension constraints=11 d=3", 0), 0u);
  EXPECT_NE(r.err.find("3 vertices lifted"), std::string::npos);
}

TEST(Cli, VerifyReductions) {
  EXPECT_EQ(call({"verify", "--reduction", "st", "--n", "4"}).out, "OK: 256/256 pairs equivalent\n");
  EXPECT_EQ(call({"verify", "--reduction", "pm", "--n", "3"}).code, 0);
  const auto neg = call({"verify", "--reduction", "pm", "--n", "2", "--negative-control"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_EQ(neg.out.rfind("OK: negative control falsified", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({"slack", "--family", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"slack", "--family", "spanning-tree"}).code, 2);
  EXPECT_EQ(call({"slack", "--family", "spanning-tree", "--n", "3", "--bogus"}).code, 2);
  EXPECT_EQ(call({"verify", "--protocol", "perfect-matching", "--n", "5"}).code, 2);
  EXPECT_EQ(call({"reduce", "--target", "st", "--n", "2", "--A", "7"}).code, 2);
  EXPECT_EQ(call({"verify", "--protocol-file", "does_not_exist.txt", "--matrix", "x.csv"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = call({"protocol", "--name", "perfect-matching", "--n", "4"});
  const auto b = call({"protocol", "--name", "perfect-matching", "--n", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}
