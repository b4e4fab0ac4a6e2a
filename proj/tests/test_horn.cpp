#include "flagcoh/deform.hpp"
#include "flagcoh/horn.hpp"

#include <gtest/gtest.h>

#include <random>

namespace flagcoh {
namespace {

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "G2", "B3", "C3"};

std::vector<ParabolicIndex> all_parabolics(int rank) {
  std::vector<ParabolicIndex> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.emplace_back(m);
  return out;
}

std::vector<ElementId> elements(const ParabolicQuotient& q, const std::vector<int>& idx) {
  std::vector<ElementId> out;
  for (int k : idx) out.push_back(q.element(k));
  return out;
}

TEST(CentralCharacters, MinusculeHasOne) {
  for (auto [label, i] : std::vector<std::pair<std::string, int>>{{"A3", 1}, {"B3", 0}, {"C3", 2}, {"A2", 0}}) {
    const auto rs = RootSystem::build(CartanType::parse(label));
    const auto cs = central_characters(rs, ParabolicIndex::maximal(rs.rank(), i));
    ASSERT_EQ(cs.size(), 1u) << label;
    EXPECT_EQ(cs[0].signature, std::vector<std::int64_t>{1});
  }
}

TEST(CentralCharacters, C3SecondMaximal) {
  const auto rs = RootSystem::build(CartanType::parse("C3"));
  const auto cs = central_characters(rs, ParabolicIndex::maximal(3, 1));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].signature, std::vector<std::int64_t>{1});
  EXPECT_EQ(cs[1].signature, std::vector<std::int64_t>{2});
  EXPECT_EQ(cs[0].roots.size() + cs[1].roots.size(), 7u);
}

TEST(CentralCharacters, PartitionChi) {
  for (const auto& label : kSmallTypes) {
    Workspace ws(CartanType::parse(label));
    const auto& g = ws.group();
    for (const auto& p : all_parabolics(g.rank())) {
      const auto cs = central_characters(g.roots(), p);
      const auto& q = ws.quotient(p);
      const auto& chars = ws.characters(p);
      for (int k = 0; k < static_cast<int>(q.size()); ++k) {
        IntVector sum(g.rank(), 0);
        for (const auto& c : cs) {
          const auto part = chi_central(g, c, q.element(k));
          for (int i = 0; i < g.rank(); ++i) sum[i] += part[i];
        }
        EXPECT_EQ(sum, chars.chi(k)) << label << " " << p.label(g.rank()) << " " << k;
      }
    }
  }
}

TEST(CheckT2, DualPairsHoldWithEquality) {
  for (const auto& label : kSmallTypes) {
    Workspace ws(CartanType::parse(label));
    HornEngine engine(ws);
    for (const auto& p : all_parabolics(ws.group().rank())) {
      const auto& q = ws.quotient(p);
      for (int k = 0; k < static_cast<int>(q.size()); ++k) {
        const auto r = engine.check_T2(p, {q.element(k), q.element(q.dual(k))});
        ASSERT_TRUE(r.applicable);
        EXPECT_TRUE(r.passed());
        for (const auto& c : r.checks)
          if (c.kind == CheckKind::Center) EXPECT_EQ(c.lhs, c.rhs);
      }
    }
  }
}

TEST(CheckT2, VanishingProductIsNotApplicable) {
  Workspace ws(CartanType::parse("A2"));
  HornEngine engine(ws);
  const auto& g = ws.group();
  const auto s1 = g.simple_reflection(0);
  const auto s2 = g.simple_reflection(1);
  const auto& q = ws.quotient(ParabolicIndex::borel());
  bool found = false;
  for (const auto& idx : codim_tuples(q, 2, q.dimension())) {
    const auto t = elements(q, idx);
    const auto r = engine.check_T2(ParabolicIndex::borel(), t);
    if (r.d == 0) {
      EXPECT_FALSE(r.applicable);
      EXPECT_NE(r.note.find("not applicable"), std::string::npos);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(engine.check_T2(ParabolicIndex::borel(), {s1, s2}), DimensionMismatch);
}

TEST(CheckT2, ReportsReevaluate) {
  Workspace ws(CartanType::parse("B3"));
  HornEngine engine(ws);
  const auto p = ParabolicIndex::maximal(3, 1);
  const auto& q = ws.quotient(p);
  for (const auto& idx : codim_tuples(q, 3, q.dimension())) {
    const auto r = engine.check_T2(p, elements(q, idx));
    for (const auto& c : r.checks) EXPECT_EQ(c.evaluate(), c.passed);
  }
}

// Exhaustive: all s=3 tuples at rank <= 3, all parabolics.
TEST(CheckT2, SoundOnAllSmallTriples) {
  for (const auto& label : kSmallTypes) {
    Workspace ws(CartanType::parse(label));
    HornEngine engine(ws);
    std::size_t applicable = 0;
    for (const auto& p : all_parabolics(ws.group().rank())) {
      const auto& q = ws.quotient(p);
      for (const auto& idx : codim_tuples(q, 3, q.dimension())) {
        const auto t = elements(q, idx);
        const auto r = engine.check_T2(p, t);
        if (!r.applicable) continue;
        ++applicable;
        ASSERT_TRUE(r.passed()) << label << " " << p.label(ws.group().rank());
        if (is_L_movable(ws, p, t).movable) {
          const auto r2 = engine.check_T2prime(p, t);
          ASSERT_TRUE(r2.passed()) << label << " " << p.label(ws.group().rank());
        }
      }
    }
    EXPECT_GT(applicable, 0u) << label;
  }
}

TEST(CheckT2Prime, RejectsNonMovable) {
  Workspace ws(CartanType::parse("B3"));
  HornEngine engine(ws);
  const auto p = ParabolicIndex::maximal(3, 1);
  const auto& q = ws.quotient(p);
  bool found = false;
  for (const auto& idx : codim_tuples(q, 3, q.dimension())) {
    const auto t = elements(q, idx);
    const auto lm = is_L_movable(ws, p, t);
    if (lm.d != 0 && !lm.movable) {
      EXPECT_THROW(engine.check_T2prime(p, t), InvalidInput);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(CheckT2Prime, DualPairCounts) {
  for (const auto& label : kSmallTypes) {
    Workspace ws(CartanType::parse(label));
    const auto& g = ws.group();
    for (const auto& p : all_parabolics(g.rank())) {
      const auto& q = ws.quotient(p);
      const auto cs = central_characters(g.roots(), p);
      for (int k = 0; k < static_cast<int>(q.size()); ++k)
        for (const auto& c : cs)
          EXPECT_EQ(central_count(g, c, q.element(k)) + central_count(g, c, q.element(q.dual(k))),
                    central_count(g, c, g.identity()));
    }
  }
}

TEST(CheckT2Prime, RefinedSumsToCenterPrime) {
  Workspace ws(CartanType::parse("C3"));
  HornEngine engine(ws);
  for (const auto& p : all_parabolics(3)) {
    const auto& q = ws.quotient(p);
    for (const auto& idx : codim_tuples(q, 3, q.dimension())) {
      const auto t = elements(q, idx);
      if (!is_L_movable(ws, p, t).movable) continue;
      const auto r1 = engine.check_T2(p, t);
      const auto r2 = engine.check_T2prime(p, t);
      std::map<std::string, std::pair<Rational, Rational>> sums;
      for (const auto& c : r2.checks) {
        if (c.kind != CheckKind::T2PrimeRefined) continue;
        auto& s = sums[c.datum.substr(0, c.datum.find(" c="))];
        s.first += c.lhs;
        s.second += c.rhs;
      }
      std::size_t matched = 0;
      for (const auto& c : r1.checks) {
        if (c.kind != CheckKind::CenterPrime) continue;
        if (!sums.count(c.datum)) {
          // No central characters: L = G and both sides vanish.
          EXPECT_EQ(p, ParabolicIndex::whole(3));
          EXPECT_EQ(c.lhs, 0);
          EXPECT_EQ(c.rhs, 0);
          continue;
        }
        EXPECT_EQ(sums[c.datum].first, c.lhs);
        EXPECT_EQ(sums[c.datum].second, c.rhs);
        ++matched;
      }
      EXPECT_EQ(matched, sums.size());
    }
  }
}

TEST(CheckDimension, CodimOfLongest) {
  Workspace ws(CartanType::parse("B3"));
  HornEngine engine(ws);
  EXPECT_EQ(engine.codim_by_roots(ParabolicIndex::borel(), ws.group().identity()), 9);
  EXPECT_EQ(engine.codim_by_roots(ParabolicIndex::borel(), ws.group().longest()), 0);
}

// Runs check_dimension over every datum built from a nonzero w-tuple.
std::size_t scan_dimension(const Workspace& ws, const HornEngine& engine, const ParabolicIndex& p, int s,
                           std::size_t stride, std::mt19937& rng) {
  const int n = ws.group().rank();
  const auto& q = ws.quotient(p);
  std::size_t checked = 0;
  std::vector<std::vector<int>> wtuples;
  for (int total = 0; total <= q.dimension(); ++total)
    for (const auto& idx : codim_tuples(q, s, total))
      if (engine.product_nonzero(p, elements(q, idx))) wtuples.push_back(idx);
  for (std::uint32_t qm = 0; qm < (1u << n); ++qm) {
    const ParabolicIndex qq(qm);
    if (!qq.subset_of(p)) continue;
    std::vector<std::vector<ElementId>> utuples;
    if (qq == p || p == ParabolicIndex::borel()) {
      utuples.push_back(std::vector<ElementId>(s, ws.group().identity()));
    } else {
      for (const auto& lt : engine.levi_tuples(p, s, false))
        if (lt.q == qq) utuples = lt.tuples;
    }
    for (std::uint32_t hm = 0; hm < (1u << n); ++hm) {
      const ParabolicIndex qhat(hm);
      if (!qq.subset_of(qhat)) continue;
      for (const auto& w : wtuples)
        for (const auto& u : utuples) {
          if (stride > 1 && rng() % stride != 0) continue;
          const auto r = engine.check_dimension(p, elements(q, w), qq, qhat, u);
          EXPECT_TRUE(r.passed()) << ws.roots().label() << " P=" << p.label(n) << " " << [&] {
            std::string s;
            for (const auto& c : r.checks)
              if (!c.passed) s += c.datum + "; ";
            return s;
          }();
          ++checked;
        }
    }
  }
  return checked;
}

TEST(CheckDimension, BorelCaseA2Exhaustive) {
  Workspace ws(CartanType::parse("A2"));
  HornEngine engine(ws);
  std::mt19937 rng(1);
  EXPECT_GT(scan_dimension(ws, engine, ParabolicIndex::borel(), 2, 1, rng), 0u);
  EXPECT_GT(scan_dimension(ws, engine, ParabolicIndex::borel(), 3, 1, rng), 0u);
}

TEST(CheckDimension, SampledRankAtMostThree) {
  std::mt19937 rng(20261016);
  for (const auto& label : kSmallTypes) {
    Workspace ws(CartanType::parse(label));
    HornEngine engine(ws);
    std::size_t checked = 0;
    for (const auto& p : all_parabolics(ws.group().rank()))
      checked += scan_dimension(ws, engine, p, 2, ws.group().size() > 24 ? 40 : 4, rng);
    EXPECT_GT(checked, 0u) << label;
  }
}

TEST(CheckDimension, RejectsVanishingPrecondition) {
  Workspace ws(CartanType::parse("A2"));
  HornEngine engine(ws);
  const auto& g = ws.group();
  const auto b = ParabolicIndex::borel();
  EXPECT_THROW(engine.check_dimension(b, {g.identity(), g.identity()}, b, b, {0, 0}), InvalidInput);
}

TEST(ConverseExperiment, RunsAndCounts) {
  Workspace ws(CartanType::parse("B3"));
  HornEngine engine(ws);
  const auto r = horn_converse_experiment(engine, ParabolicIndex::maximal(3, 1), 3, 5);
  EXPECT_GT(r.tuples_examined, 0u);
  EXPECT_LE(r.zero_but_passing, r.zero_products);
  EXPECT_LE(r.examples.size(), 5u);
}

}  // namespace
}  // namespace flagcoh
