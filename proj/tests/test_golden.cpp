#include "flagcoh/cache.hpp"
#include "flagcoh/golden.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace flagcoh {
namespace {

TEST(Golden, BundledTablesParse) {
  const auto tables = bundled_golden_tables();
  ASSERT_EQ(tables.size(), 4u);
  std::map<std::string, std::size_t> classes;
  for (const auto& t : tables) classes[t.name] = t.classes.size();
  EXPECT_EQ(classes["b3_p2"], 11u);  // 12 with the identity
  EXPECT_EQ(classes["c3_p1"], 5u);
}

TEST(Golden, AllTablesVerify) {
  for (const auto& t : bundled_golden_tables()) {
    Workspace ws(t.type);
    const auto r = verify_golden(ws, t);
    EXPECT_TRUE(r.passed) << t.name;
    EXPECT_EQ(r.bijections_matching, 1u) << t.name;
    EXPECT_TRUE(r.diffs.empty());
    EXPECT_EQ(r.entries, t.entries.size());
  }
}

TEST(Golden, PerturbedTableFails) {
  auto t = bundled_golden_tables()[2];
  ASSERT_EQ(t.name, "c3_p1");
  for (auto& e : t.entries)
    if (e.row == "a1" && e.column == "a2") e.terms[0].tau = 0;
  Workspace ws(t.type);
  const auto r = verify_golden(ws, t);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.diffs.size(), 1u);
}

TEST(Golden, ParseErrorsNameTheLine) {
  try {
    parse_golden("type C3\nmaximal 1\nclass a1 1\na1 a1 = 2 tau^x a1\n", "bad");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
  EXPECT_THROW(parse_golden("type Q3\n", "bad"), InvalidInput);
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("flagcoh-cache-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, ColdAndWarmAgree) {
  const auto type = CartanType::parse("B3");
  const auto p = ParabolicIndex::maximal(3, 1);
  WorkspaceOptions opts;
  opts.cache_dir = dir_;
  std::vector<std::vector<Term>> cold, warm;
  {
    Workspace ws(type, opts);
    const auto& t = ws.table(p);
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) cold.push_back(t.product(a, b));
  }
  EXPECT_TRUE(std::filesystem::exists(cache_file(dir_, type, p)));
  {
    Workspace ws(type, opts);
    const auto& t = ws.table(p);
    EXPECT_EQ(ws.cache_hits(), 1);
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) warm.push_back(t.product(a, b));
  }
  EXPECT_EQ(cold, warm);
}

TEST_F(CacheTest, CorruptFileIsIgnored) {
  const auto type = CartanType::parse("C3");
  const auto p = ParabolicIndex::maximal(3, 0);
  WorkspaceOptions opts;
  opts.cache_dir = dir_;
  { Workspace ws(type, opts); ws.table(p); }
  const auto file = cache_file(dir_, type, p);
  std::string text;
  {
    std::ifstream in(file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find("\"entries\"");
  ASSERT_NE(pos, std::string::npos);
  const auto digit = text.find_first_of("123456789", pos);
  text[digit] = text[digit] == '9' ? '8' : static_cast<char>(text[digit] + 1);
  { std::ofstream(file) << text; }
  Workspace ws(type);
  EXPECT_FALSE(load_product_table(dir_, type, ws.quotient(p)).has_value());
  { std::ofstream(file) << "not json"; }
  EXPECT_FALSE(load_product_table(dir_, type, ws.quotient(p)).has_value());
}

}  // namespace
}  // namespace flagcoh
