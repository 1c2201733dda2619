#include "cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = catwalk::cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("CATWALK_MAX_N"); }
  void TearDown() override { unsetenv("CATWALK_MAX_N"); }
};

TEST_F(Cli, CountC4) {
  const auto r = run({"count", "--class", "C", "--length", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST_F(Cli, MapC2Tree) {
  const auto r = run({"map", "--mode", "c2tree"}, "1 1 -2\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(L (L L))\n");
}

TEST_F(Cli, VerifyAll) {
  const auto r = run({"verify", "--suite", "all", "--max-n", "10"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("11/11 checks passed"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifySuites) {
  for (const char *s : {"catalan", "stats", "unary", "excursions", "roundtrip", "series"}) {
    const auto r = run({"verify", "--suite", s, "--max-n", "8"});
    EXPECT_EQ(r.code, 0) << s << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  }
}

TEST_F(Cli, EnumerateText) {
  const auto r = run({"enumerate", "--class", "G", "--length", "3"});
  EXPECT_EQ(r.out, "1 1 -1\n1 2 -2\n2 1 -2\n");
  EXPECT_EQ(run({"enumerate", "--class", "A", "--length", "0"}).out, "\n");
  EXPECT_EQ(run({"enumerate", "--class", "C", "--length", "1"}).out, "");
}

TEST_F(Cli, EnumerateJson) {
  const auto r = run({"enumerate", "--class", "C", "--length", "2", "--json"});
  EXPECT_EQ(r.out, "{\"origin\":0,\"steps\":[1,-1]}\n");
  const auto m = run({"enumerate", "--class", "M", "--length", "3", "--json"});
  EXPECT_EQ(m.out,
            "{\"steps\":[1,1,-1],\"decorations\":[[1,2]]}\n"
            "{\"steps\":[1,1,-1],\"decorations\":[[2,1]]}\n");
}

TEST_F(Cli, EnumerateDecoratedText) {
  const auto r = run({"enumerate", "--class", "T", "--length", "3"});
  EXPECT_EQ(r.out, "1 0 0 ; -\n1 1 -1 ; 1 2\n1 1 -1 ; 2 1\n");
}

TEST_F(Cli, CountByStats) {
  const auto p = run({"count", "--class", "C", "--length", "4", "--by-stats", "parity"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "1 0 2 1\n1 1 1 2\n1 2 0 1\n2 0 0 1\n");
  const auto s = run({"count", "--class", "G", "--length", "3", "--by-stats", "staggered"});
  EXPECT_EQ(s.out, "0 2\n2 1\n");
  const auto u = run({"count", "--class", "G", "--length", "3", "--by-stats", "unary"});
  EXPECT_EQ(u.out, s.out);
  const auto t = run({"count", "--class", "T", "--length", "3", "--by-stats", "unary"});
  EXPECT_EQ(t.out, s.out);
  EXPECT_EQ(run({"count", "--class", "G", "--length", "3", "--by-stats", "parity"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "A", "--length", "3", "--by-stats", "unary"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "T", "--length", "5"}).out, "22\n");
}

TEST_F(Cli, MapModesRoundTrip) {
  EXPECT_EQ(run({"map", "--mode", "tree2c"}, "(L (L L))\n((L L) L)\n").out, "1 1 -2\n2 -1 -1\n");
  EXPECT_EQ(run({"map", "--mode", "g2tree"}, "2 -1\n\n1 2 -2\n").out, "1(2)\n1(3,2)\n");
  EXPECT_EQ(run({"map", "--mode", "tree2g"}, "1(2)\n").out, "2 -1\n");
  EXPECT_EQ(run({"map", "--mode", "tree2motzkin"}, "1(3,2)\n").out, "1 1 -1 ; 2 1\n");
  EXPECT_EQ(run({"map", "--mode", "motzkin2tree"}, "1 1 -1 ; 1 2\n").out, "1(2,3)\n");
  EXPECT_EQ(run({"map", "--mode", "g2tree", "--json"}, "2 -1\n").out, "{\"shape\":[[]],\"perm\":[1,2]}\n");
}

TEST_F(Cli, MapBadLine) {
  const auto r = run({"map", "--mode", "c2tree"}, "1 -1\n2 -2\n1 -1\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "(L L)\n");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"map", "--mode", "c2tree"}, "1 x\n").code, 2);
}

TEST_F(Cli, Coeffs) {
  const auto r = run({"coeffs", "--series", "G", "--order", "5"});
  EXPECT_EQ(r.out, "0 0 0\n1 0 1\n2 0 1\n3 0 3\n4 0 7\n5 0 22\n");
  const auto b = run({"coeffs", "--series", "G", "--order", "3", "--bivariate"});
  EXPECT_EQ(b.out, "1 0 1\n2 1 1\n3 0 2\n3 2 1\n");
  const auto c = run({"coeffs", "--series", "catalan", "--order", "3", "--bivariate"});
  EXPECT_EQ(c.out, "0 0 1\n1 0 1\n2 0 2\n3 0 5\n");
  EXPECT_EQ(run({"coeffs", "--series", "G", "--order", "65"}).code, 3);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--class", "X", "--length", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "C"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "C", "--length", "-3"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--class", "A", "--length", "25"}).code, 3);
  EXPECT_EQ(run({"verify", "--suite", "all", "--max-n", "13"}).code, 3);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, EnvOverride) {
  setenv("CATWALK_MAX_N", "5", 1);
  EXPECT_EQ(run({"count", "--class", "C", "--length", "6"}).code, 3);
  EXPECT_EQ(run({"count", "--class", "C", "--length", "5"}).code, 0);
  const auto v = run({"verify", "--suite", "stats"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("n=2..5"), std::string::npos) << v.out;
  setenv("CATWALK_MAX_N", "abc", 1);
  EXPECT_EQ(run({"count", "--class", "C", "--length", "4"}).code, 2);
}

TEST_F(Cli, Deterministic) {
  const std::vector<std::string> args{"enumerate", "--class", "M", "--length", "6"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
