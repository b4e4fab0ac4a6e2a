#include "commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace flagcoh::cli {
namespace {

JobSpec job(std::string command, std::string type) {
  JobSpec s;
  s.command = std::move(command);
  s.type = std::move(type);
  s.threads = 1;
  return s;
}

TEST(Cli, DeformTableUsesReferenceLabels) {
  auto s = job("deform-table", "C");
  s.rank = 3;
  s.parabolic = "1";
  s.format = "csv";
  const auto r = run(s);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.text.find("a1,a2,tau1*a3"), std::string::npos);
  EXPECT_NE(r.text.find("a1,a3,a4"), std::string::npos);
  EXPECT_NE(r.text.find("a1,a5,0"), std::string::npos);
  EXPECT_NE(r.text.find("a2,a2,tau1*a4"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicAcrossThreadCounts) {
  for (const std::string format : {"markdown", "csv", "json"}) {
    auto s = job("eigencone", "B3");
    s.s = 3;
    s.mode = "deformed";
    s.format = format;
    const auto a = run(s);
    const auto b = run(s);
    EXPECT_EQ(a.text, b.text);
    s.threads = 3;
    auto c = run(s).text;
    // Only the echoed thread count differs.
    const auto pos = c.find("threads");
    ASSERT_NE(pos, std::string::npos);
    auto d = a.text;
    EXPECT_EQ(c.substr(0, pos), d.substr(0, pos));
    EXPECT_EQ(c.substr(c.find('\n', pos)), d.substr(d.find('\n', pos)));
  }
}

TEST(Cli, ColdAndWarmCacheAgree) {
  const auto dir = std::filesystem::temp_directory_path() / "flagcoh-cli-cache";
  std::filesystem::remove_all(dir);
  auto s = job("deform-table", "B3");
  s.parabolic = "2";
  s.cache_dir = dir.string();
  const auto cold = run(s);
  ASSERT_FALSE(std::filesystem::is_empty(dir));
  const auto warm = run(s);
  EXPECT_EQ(cold.text, warm.text);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerificationCommandsPass) {
  EXPECT_EQ(run(job("verify-golden", "")).code, kOk);
  EXPECT_EQ(run(job("leviprod-check", "A2")).code, kOk);
}

TEST(Cli, TwoSummandSystemIsDualPairs) {
  auto s = job("eigencone", "B");
  s.rank = 3;
  s.s = 2;
  s.mode = "deformed";
  s.format = "csv";
  const auto r = run(s);
  EXPECT_NE(r.text.find("total,26,-"), std::string::npos);
}

TEST(Cli, RedundancyRoundTrip) {
  const auto file = std::filesystem::temp_directory_path() / "flagcoh-cli-system.json";
  auto s = job("eigencone", "C3");
  s.s = 3;
  s.output = file.string();
  s.format = "csv";
  ASSERT_EQ(run(s).code, kOk);
  auto r = job("redundancy", "");
  r.input = file.string();
  r.format = "csv";
  const auto out = run(r);
  EXPECT_EQ(out.code, kOk);
  EXPECT_NE(out.text.find("total,126,33"), std::string::npos);
  std::filesystem::remove(file);
}

TEST(Cli, InvalidSpecsThrow) {
  EXPECT_THROW(run(job("roots", "Q3")), InvalidInput);
  EXPECT_THROW(run(job("frobnicate", "A2")), InvalidInput);
  auto s = job("lmovable", "B3");
  s.parabolic = "2";
  s.tuple = {"1"};  // not in W^P
  EXPECT_THROW(run(s), InvalidInput);
  s.tuple = {"11"};
  EXPECT_THROW(run(s), InvalidInput);
  auto e = job("weyl", "E8");
  e.weyl_cap = 1000;
  EXPECT_THROW(run(e), BudgetExceeded);
}

}  // namespace
}  // namespace flagcoh::cli
