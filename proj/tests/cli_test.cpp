#include "catalan_lab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

using namespace catalan_lab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string data(const std::string& name) { return std::string(CATALAN_LAB_TEST_DATA) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv(kMaxNEnv); }
  void TearDown() override { unsetenv(kMaxNEnv); }
};

}  // namespace

TEST_F(CliTest, EnumerateWords) {
  const auto r = run({"enumerate", "--kind", "words", "--n", "4", "--format", "plain"});
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 14u);
  EXPECT_EQ(l.front(), "1111");
}

TEST_F(CliTest, EnumerateEmpty) {
  const auto r = run({"enumerate", "--n", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n");
}

TEST_F(CliTest, EnumeratePaths) {
  const auto r = run({"enumerate", "--kind", "paths", "--n", "2"});
  EXPECT_EQ(r.out, "UUDD\nUDUD\n");
}

TEST_F(CliTest, EnumerateJsonAndCsv) {
  const auto j = run({"enumerate", "--n", "2", "--format", "json"});
  EXPECT_EQ(j.out, "{\"index\":1,\"value\":\"11\"}\n{\"index\":2,\"value\":\"12\"}\n");
  const auto js = run({"enumerate", "--n", "1", "--format", "json", "--with-stats"});
  EXPECT_NE(js.out.find("\"stats\":{"), std::string::npos);
  EXPECT_NE(js.out.find("\"area\":1"), std::string::npos);
  const auto c = run({"enumerate", "--n", "2", "--format", "csv"});
  EXPECT_EQ(c.out, "index,value\n1,11\n2,12\n");
}

TEST_F(CliTest, CeilingPrecedence) {
  EXPECT_EQ(run({"enumerate", "--n", "17"}).code, 2);
  EXPECT_EQ(run({"--max-n", "3", "enumerate", "--n", "4"}).code, 2);
  setenv(kMaxNEnv, "3", 1);
  EXPECT_EQ(run({"enumerate", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "3"}).code, 0);
  // The flag beats the environment.
  EXPECT_EQ(run({"--max-n", "4", "enumerate", "--n", "4"}).code, 0);
  setenv(kMaxNEnv, "abc", 1);
  EXPECT_EQ(run({"enumerate", "--n", "1"}).code, 2);
}

TEST_F(CliTest, TotalsRows) {
  auto r = run({"totals", "--n-max", "4", "--stat", "sym-valley"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).back(), "4 sym-valley 1 1 true");
  r = run({"totals", "--n-max", "3", "--stat", "area", "--format", "csv"});
  EXPECT_EQ(r.out, "n,stat,brute,closed,match\n1,area,1,1,true\n2,area,5,5,true\n3,area,22,22,true\n");
  r = run({"totals", "--n-max", "2", "--stat", "runs-weak-asc", "--format", "json"});
  EXPECT_EQ(r.out,
            "{\"brute\":1,\"closed\":1,\"match\":true,\"n\":1,\"stat\":\"runs-weak-asc\"}\n"
            "{\"brute\":2,\"closed\":2,\"match\":true,\"n\":2,\"stat\":\"runs-weak-asc\"}\n");
}

TEST_F(CliTest, TotalsParallelIsIdentical) {
  const auto a = run({"totals", "--n-max", "8"});
  const auto b = run({"totals", "--n-max", "8", "--parallel", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 1u + 8u * 12u);
}

TEST_F(CliTest, TotalsCsvRoundTrip) {
  const std::string path = ::testing::TempDir() + "/totals.csv";
  const auto r = run({"totals", "--n-max", "5", "--format", "csv"});
  { std::ofstream(path) << r.out; }
  EXPECT_EQ(run({"totals", "--from-csv", path}).code, r.code);
  // A tampered row flips the exit code to a mismatch.
  std::string tampered = r.out;
  tampered.replace(tampered.find("1,area,1,1,true"), 15, "1,area,1,2,false");
  { std::ofstream(path) << tampered; }
  EXPECT_EQ(run({"totals", "--from-csv", path}).code, 1);
  EXPECT_EQ(run({"totals", "--from-csv", path + ".missing"}).code, 2);
}

TEST_F(CliTest, TotalsUsageErrors) {
  EXPECT_EQ(run({"totals"}).code, 2);
  EXPECT_EQ(run({"totals", "--n-max", "3", "--stat", "bogus"}).code, 2);
  EXPECT_EQ(run({"totals", "--n-max", "20"}).code, 2);
}

TEST_F(CliTest, Verify) {
  auto r = run({"verify", "--suite", "identities", "--n-max", "100"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("suite identities"), std::string::npos);
  EXPECT_NE(r.out.find("0 failures [PASS]"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bijections", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "distributions", "--n-max", "8"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "bijections", "--n-max", "9"}).code, 2);
}

TEST_F(CliTest, OeisEmit) {
  EXPECT_EQ(run({"oeis", "--id", "A000346", "--terms", "4"}).out, "1 1\n2 5\n3 22\n4 93\n");
  EXPECT_EQ(run({"oeis", "--id", "A000984", "--terms", "3"}).out, "1 1\n2 2\n3 6\n");
  EXPECT_EQ(run({"oeis", "--id", "A057552", "--terms", "3"}).out, "3 1\n4 5\n5 20\n");
  EXPECT_EQ(run({"oeis", "--id", "A000346", "--terms", "2", "--indexing", "oeis"}).out,
            "0 1\n1 5\n");
  // Rows without an id need an explicit statistic.
  EXPECT_EQ(run({"oeis", "--stat", "ell-valley:1", "--offset", "4", "--terms", "2"}).out,
            "4 1\n5 7\n");
  EXPECT_EQ(run({"oeis", "--id", "A000001"}).code, 2);
  EXPECT_EQ(run({"oeis"}).code, 2);
  EXPECT_EQ(run({"oeis", "--id", "A000346", "--terms", "0"}).code, 2);
}

TEST_F(CliTest, OeisCheck) {
  for (const char* id :
       {"A057552", "A051924", "A000984", "A002054", "A002694", "A097613", "A000346"}) {
    const std::string file = data(std::string("b") + (id + 1) + ".txt");
    const auto r = run({"oeis", "--id", id, "--terms", "10", "--check", file});
    EXPECT_EQ(r.code, 0) << id << ": " << r.out << r.err;
    EXPECT_NE(r.out.find("10 terms match"), std::string::npos);
  }
  // The same file read against the wrong sequence diverges.
  const auto bad = run({"oeis", "--id", "A000984", "--terms", "10", "--check", data("b000346.txt")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("first divergence"), std::string::npos);
  // Asking for more terms than the file has is a divergence too.
  EXPECT_EQ(run({"oeis", "--id", "A000346", "--terms", "20", "--check", data("b000346.txt")}).code,
            1);
}

TEST_F(CliTest, Distribution) {
  auto r = run({"distribution", "--stat", "runs-asc", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "value count narayana match\n"
            "1 1 1 true\n2 6 6 true\n3 6 6 true\n4 1 1 true\n");
  r = run({"distribution", "--stat", "area", "--n", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "value,count\n2,1\n3,1\n");
  r = run({"distribution", "--stat", "semi", "--n", "1"});
  EXPECT_EQ(lines(r.out).size(), 2u);
  EXPECT_EQ(run({"distribution", "--stat", "area"}).code, 2);
}

TEST_F(CliTest, Sample) {
  const auto a = run({"sample", "--n", "5", "--seed", "9", "--count", "20"});
  const auto b = run({"sample", "--n", "5", "--seed", "9", "--count", "20"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 20u);
  EXPECT_EQ(run({"sample", "--n", "5"}).code, 2);
}

TEST_F(CliTest, UsageAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"enumerate", "--n", "2", "--format", "xml"}).code, 2);
}
