#include "polymult/cli.hpp"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "polymult/group_model.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = polymult::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliWitt, Values) {
  EXPECT_EQ(run({"witt", "-w", "2", "-n", "4"}).out, "6\n");
  EXPECT_EQ(run({"witt", "-w", "5", "-n", "1"}).out, "0\n");
  EXPECT_EQ(run({"witt", "-w", "3", "-n", "100000000000000000000"}).code, polymult::kExitOk);
}

TEST(CliWitt, UsageErrors) {
  EXPECT_EQ(run({"witt", "-w", "0", "-n", "3"}).code, polymult::kExitUsage);
  EXPECT_EQ(run({"witt", "-w", "2"}).code, polymult::kExitUsage);
  EXPECT_EQ(run({"witt", "-w", "2", "-n", "x"}).code, polymult::kExitUsage);
  EXPECT_EQ(run({}).code, polymult::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, polymult::kExitUsage);
}

TEST(CliMultiplier, Examples) {
  auto r = run({"multiplier", "-g", "Z_4 + Z_2", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "Z_2, order 2^1, T2.7");

  r = run({"multiplier", "-g", "Z_9 *2* Z_3", "-c", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "Z_3^(5), order 3^5"));
  EXPECT_TRUE(contains(r.out, "T2.14"));

  r = run({"multiplier", "-g", "Z *2* Z *1* Z_3", "-c", "2"});
  EXPECT_TRUE(contains(r.out, "Z^(5) + Z_3^(6), order infinite, T2.16"));
}

TEST(CliMultiplier, ExplicitTheorem) {
  auto r = run({"multiplier", "-g", "Z_9 *2* Z_3", "-c", "2", "--theorem", "T2.14"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "T2.14"));
  EXPECT_EQ(run({"multiplier", "-g", "Z_9 *2* Z_3", "-c", "2", "--theorem", "T9.9"}).code, polymult::kExitUsage);
}

TEST(CliMultiplier, RefusalNamesCondition) {
  auto r = run({"multiplier", "-g", "Z_2 *2* Z_2", "-c", "2"});
  EXPECT_EQ(r.code, polymult::kExitRefused);
  EXPECT_TRUE(contains(r.err, "gcd(2,2)=1"));
  EXPECT_TRUE(contains(r.err, "[violated]"));
}

TEST(CliMultiplier, ParseErrorsReportPosition) {
  auto r = run({"multiplier", "-g", "Z_4 +", "-c", "1"});
  EXPECT_EQ(r.code, polymult::kExitUsage);
  EXPECT_TRUE(contains(r.err, "position 5"));
  r = run({"multiplier", "-g", "Z_2 *3* Z_4", "-c", "3"});
  EXPECT_EQ(r.code, polymult::kExitUsage);
  EXPECT_TRUE(contains(r.err, "4 does not divide 2"));
  EXPECT_EQ(run({"multiplier", "-g", "Z_4", "-c", "2,,1"}).code, polymult::kExitUsage);
}

TEST(CliMultiplier, RecordRoundTripsThroughGrammar) {
  for (const char* g : {"Z_4 + Z_2", "Z_9 *2* Z_3", "Z^2 + Z_4 + Z_2", "Z *2* Z *1* Z_3"}) {
    auto r = run({"multiplier", "-g", g, "-c", "2", "--format", "record"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(polymult::parse_group(j["group"].get<std::string>()), polymult::parse_group(g));
    EXPECT_EQ(r.out, run({"multiplier", "-g", g, "-c", "2", "--format", "record"}).out);
  }
}

TEST(CliHall, Examples) {
  auto r = run({"hall", "-n", "2", "-w", "3"});
  EXPECT_EQ(r.out, "[[x2,x1],x1]\n[[x2,x1],x2]\ncount: 2\n");
  r = run({"hall", "-n", "3", "-w", "2", "--contains", "3"});
  EXPECT_TRUE(contains(r.out, "count: 2"));
  r = run({"hall", "-n", "0", "-w", "2"});
  EXPECT_EQ(r.out, "count: 0\n");
  EXPECT_EQ(r.code, 0);
}

TEST(CliHall, TruncatesListingButNotCount) {
  auto r = run({"hall", "-n", "6", "-w", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "count: 315"));
  std::size_t lines = std::count(r.out.begin(), r.out.end(), '\n');
  EXPECT_LE(lines, 203u);
}

TEST(CliHall, ResourceCapExceeded) {
  auto r = run({"hall", "-n", "3", "-w", "12"});
  EXPECT_EQ(r.code, polymult::kExitRefused);
}

TEST(CliClassify, Examples) {
  auto r = run({"classify", "-p", "2", "-m", "3", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(3)"));
  EXPECT_TRUE(contains(r.out, "(2,1)"));
  EXPECT_TRUE(contains(r.out, "maximizers: (1,1,1)"));
  EXPECT_EQ(run({"classify", "-p", "5", "-m", "3", "-c", "2", "-n", "2"}).code, 0);
  EXPECT_EQ(run({"classify", "-p", "2", "-m", "3", "-c", "2", "-n", "2"}).code, polymult::kExitRefused);
  EXPECT_EQ(run({"classify", "-p", "4", "-m", "3", "-c", "1"}).code, polymult::kExitUsage);
}

TEST(CliVerify, Examples) {
  auto r = run({"verify", "counterexample", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i=3: 9 ≥ 6\n");
  r = run({"verify", "bounds", "-p", "3", "-m", "5", "-c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "all pass"));
  EXPECT_EQ(run({"verify", "monotonicity", "-c", "2,1", "-n", "2", "--imax", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "bogus"}).code, polymult::kExitUsage);
}

TEST(CliVerify, RecordsAreLineDelimitedJson) {
  auto r = run({"verify", "bounds", "-p", "2", "-m", "3", "-c", "1", "--format", "record"});
  std::istringstream in(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    EXPECT_NO_THROW((void)nlohmann::json::parse(line));
    ++n;
  }
  EXPECT_GT(n, 1u);
}
