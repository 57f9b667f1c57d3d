#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("QWEYL_BIN");
  return b ? b : "qweyl";
}

Run run(const std::string& args) {
  Run r;
  std::string cmd = binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, ZElementGolden) {
  auto r = run("z-element --ell 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "a^3 + 3*a*b*c + 3*q*b*c*d");
}

TEST(Cli, NormalForm) {
  auto r = run("nf --algebra dq2 \"d2*x2\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(q^2 - 1)*x1*d1 + q^2*x2*d2 + (q^2 - 1)\n");
  auto u = run("--unicode nf \"d1*x1\"");
  EXPECT_NE(u.out.find("\xe2\x88\x82"), std::string::npos);
}

TEST(Cli, NormalFormAtRootOfUnity) {
  auto r = run("nf --algebra dq1 --ell 3 \"x1^2*x1\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x1^3\n");
}

TEST(Cli, ParseErrorsExitWithTwo) {
  auto r = run("nf \"d2*\"");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("position"), std::string::npos);
  EXPECT_EQ(run("nf \"x1^-1\"").status, 2);
  EXPECT_EQ(run("nf --algebra nope x1").status, 2);
  EXPECT_EQ(run("verify no-such-catalog").status, 2);
}

TEST(Cli, VerifyCatalogByName) {
  auto r = run("verify dq-beta");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("51/51"), std::string::npos);
}

TEST(Cli, JsonReportShape) {
  auto r = run("--json poisson --N 2");
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "qweyl-report/1");
  EXPECT_EQ(j["command"], "poisson");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j.contains("seconds"));
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("anchor"));
    EXPECT_EQ(c["verdict"], "pass");
  }
}

TEST(Cli, FiberSweepIsDeterministic) {
  auto a = run("--json fiber --N 2 --ell 3 --sweep --samples 4 --seed 7");
  auto b = run("--json fiber --N 2 --ell 3 --sweep --samples 4 --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("--json fiber --N 2 --ell 3 --sweep --samples 4 --seed 8");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, FiberSinglePoint) {
  auto r = run("fiber --N 1 --ell 3 --char 1,-1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("trace rank 3"), std::string::npos);
  EXPECT_EQ(run("fiber --N 1 --ell 3 --char 1").status, 2);
}

TEST(Cli, MomentMaps) {
  auto mu = run("moment-map mu --ell 3 --frobenius");
  EXPECT_EQ(mu.status, 0);
  EXPECT_NE(mu.out.find("mu(det_q) = beta2"), std::string::npos);
  EXPECT_EQ(mu.out.find("[fail]"), std::string::npos);
}

TEST(Cli, OutputFile) {
  std::string path = ::testing::TempDir() + "qweyl-report.json";
  auto r = run("--json -o " + path + " z-element --ell 3");
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "z-element");
}

TEST(Cli, CenterCommand) {
  auto r = run("center --algebra dq1 --ell 3 --degree-bound 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("dimension 6"), std::string::npos);
}

TEST(Cli, FiberTensorRelations) {
  auto r = run("fiber --N 2 --tensor");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("[fail]"), std::string::npos);
  EXPECT_NE(r.out.find("2 relations fail"), std::string::npos);
}
