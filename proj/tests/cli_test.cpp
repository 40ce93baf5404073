#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qconnect");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qconnect::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(QCONNECT_GOLDEN_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliEval, HermiteGolden) {
  const Result r = run({"eval", "hermite", "--n", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("eval_hermite_5.txt"));
}

TEST(CliEval, LaguerreGolden) {
  const Result r = run({"eval", "laguerre", "--n", "3", "--k", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("eval_laguerre_3_3.txt"));
  const Result latex = run({"eval", "laguerre", "--n", "3", "--k", "3", "--format", "latex"});
  EXPECT_EQ(latex.out, golden("eval_laguerre_3_3.tex"));
}

TEST(CliConnect, GegenbauerGolden) {
  std::string all;
  for (int n = 0; n <= 5; ++n) {
    const Result r = run({"connect", "gegenbauer", "--n", std::to_string(n)});
    EXPECT_EQ(r.code, 0) << r.err;
    all += r.out;
  }
  EXPECT_EQ(all, golden("connect_gegenbauer_0_5.txt"));
}

TEST(CliEval, JsonDocument) {
  const Result r = run({"eval", "hermite", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "hermite");
  EXPECT_EQ(j["coefficients"][0]["num"], "2");
  EXPECT_EQ(j["coefficients"][0]["den"], "q^{1/2}");
  EXPECT_EQ(j["total_check"], "pass");
}

TEST(CliEval, ClassicalAndBases) {
  EXPECT_EQ(run({"eval", "classical-hermite", "--n", "0"}).out, "1\n");
  EXPECT_EQ(run({"eval", "classical-hermite", "--n", "2"}).out, "4*z^{2} - 2\n");
  const Result x = run({"eval", "gegenbauer", "--n", "2", "--basis", "x"});
  EXPECT_EQ(x.code, 0);
  EXPECT_NE(x.out.find("x^{2}"), std::string::npos);
  EXPECT_EQ(run({"eval", "classical-laguerre", "--n", "2", "--k", "1"}).code, 0);
}

TEST(CliConnect, TermCounts) {
  const Result h = run({"connect", "hermite", "--n", "5", "--format", "json"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(nlohmann::json::parse(h.out)["terms"].size(), 7u);
  const Result l = run({"connect", "laguerre", "--n", "3", "--k", "3", "--aux", "2,-1,3", "--format", "json"});
  ASSERT_EQ(l.code, 0) << l.err;
  const auto j = nlohmann::json::parse(l.out);
  EXPECT_EQ(j["terms"].size(), 18u);
  EXPECT_EQ(j["total_check"], "pass");
}

TEST(CliVerify, ExitCodesAndReport) {
  EXPECT_EQ(run({"verify", "--suite", "sumrules", "--max-n", "4"}).code, 0);
  const std::string path = ::testing::TempDir() + "qconnect_report.json";
  const Result r = run({"verify", "--suite", "hermite", "--max-n", "3", "--q-sample", "0.5", "--report", path});
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["suite"], "hermite");
  EXPECT_EQ(run({"verify", "--suite", "nothing"}).code, 2);
  EXPECT_EQ(run({"verify", "--q-sample", "1.5"}).code, 2);
}

TEST(CliQexp, Forms) {
  const Result sum = run({"qexp", "--kind", "e", "--base-power", "-2", "--order", "4", "--form", "sum"});
  const Result product = run({"qexp", "--kind", "e", "--base-power", "-2", "--order", "4", "--form", "product"});
  EXPECT_EQ(sum.code, 0) << sum.err;
  EXPECT_EQ(sum.out, product.out);
}

TEST(CliErrors, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "jacobi", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "laguerre", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "hermite", "--n", "2", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "hermite", "--n", "-1"}).code, 2);
  EXPECT_EQ(run({"eval", "hermite", "--n", "20", "--order", "12"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliEnv, OrderOverride) {
  setenv("QPOLY_ORDER", "3", 1);
  EXPECT_EQ(run({"eval", "hermite", "--n", "5"}).code, 2);
  unsetenv("QPOLY_ORDER");
  EXPECT_EQ(run({"eval", "hermite", "--n", "5"}).code, 0);
}

}  // namespace
