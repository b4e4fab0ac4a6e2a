#include "flagcoh/eigencone.hpp"
#include "flagcoh/lp.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace flagcoh {
namespace {

Coweight from_values(const RootSystem& rs, const RatVector& alpha_values) {
  Coweight h{RatVector(rs.rank(), Rational(0))};
  for (int i = 0; i < rs.rank(); ++i) h = h + alpha_values[i] * rs.fundamental_coweight(i);
  return h;
}

Coweight dual_coweight(const WeylGroup& g, const Coweight& h) {
  Coweight out = g.act(g.longest(), h);
  for (auto& x : out.coords) x = -x;
  return out;
}

TEST(Lp, SmallFeasibility) {
  // x + y <= 1, -x <= -2 is infeasible; x + y <= 3, -x <= -2 feasible.
  EXPECT_FALSE(find_feasible_point({{1, 1}, {-1, 0}}, {1, -2}).has_value());
  const auto x = find_feasible_point({{1, 1}, {-1, 0}}, {3, -2});
  ASSERT_TRUE(x.has_value());
  EXPECT_GE((*x)[0], 2);
  EXPECT_LE((*x)[0] + (*x)[1], 3);
  EXPECT_TRUE(find_feasible_point({{1, -1}}, {0}).has_value());
}

TEST(Lp, DegenerateCycleFree) {
  // Beale's example shape with rationals; Bland's rule terminates.
  RatMatrix a = {{Rational(1, 4), -8, -1, 9}, {Rational(1, 2), -12, Rational(-1, 2), 3}, {0, 0, 1, 0}, {-1, -1, -1, -1}};
  RatVector b = {0, 0, 1, -1};
  const auto x = find_feasible_point(a, b);
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += a[i][j] * (*x)[j];
    EXPECT_LE(s, b[i]);
  }
}

TEST(EnumerateTuples, TwoTuplesAreDualPairs) {
  for (const auto& label : {"A2", "B3", "C3", "G2"}) {
    Workspace ws(CartanType::parse(label));
    const int n = ws.group().rank();
    for (int i = 0; i < n; ++i) {
      const auto p = ParabolicIndex::maximal(n, i);
      const auto& q = ws.quotient(p);
      for (auto mode : {SystemMode::Classical, SystemMode::Deformed}) {
        const auto tuples = enumerate_tuples(ws, p, 2, mode);
        ASSERT_EQ(tuples.size(), q.size());
        for (const auto& t : tuples) EXPECT_EQ(t[1], q.element(q.dual(q.index_of(t[0]))));
      }
    }
  }
}

TEST(EnumerateTuples, C3FirstMaximal) {
  Workspace ws(CartanType::parse("C3"));
  const auto p = ParabolicIndex::maximal(3, 0);
  const auto& q = ws.quotient(p);
  // a_k has codimension k; the deformed products a1 a2 = tau a3 and a2 a2 = tau a4.
  auto codims = [&](const std::vector<ElementId>& t) {
    std::multiset<int> c;
    for (ElementId w : t) c.insert(q.codimension(q.index_of(w)));
    return c;
  };
  std::set<std::multiset<int>> classical, deformed;
  for (const auto& t : enumerate_tuples(ws, p, 3, SystemMode::Classical)) classical.insert(codims(t));
  for (const auto& t : enumerate_tuples(ws, p, 3, SystemMode::Deformed)) deformed.insert(codims(t));
  for (const auto& c : classical) EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), 5);
  EXPECT_TRUE(deformed.count({0, 1, 4}));  // a1 a4 = a5
  EXPECT_TRUE(classical.count({1, 2, 2}));
  EXPECT_FALSE(deformed.count({1, 2, 2}));  // a2 a2 = tau a4
  EXPECT_FALSE(deformed.count({0, 2, 3}) && !classical.count({0, 2, 3}));
  for (const auto& d : deformed) EXPECT_TRUE(classical.count(d));
}

TEST(EnumerateTuples, RejectsBadInput) {
  Workspace ws(CartanType::parse("B3"));
  EXPECT_THROW(enumerate_tuples(ws, ParabolicIndex(0b001), 3, SystemMode::Classical), InvalidInput);
  EXPECT_THROW(enumerate_tuples(ws, ParabolicIndex::maximal(3, 0), 1, SystemMode::Classical), InvalidInput);
  EnumerationOptions tiny;
  tiny.budget = 10;
  EXPECT_THROW(enumerate_tuples(ws, ParabolicIndex::maximal(3, 0), 3, SystemMode::Classical, tiny), BudgetExceeded);
}

TEST(EnumerateTuples, ThreadCountDoesNotChangeOutput) {
  Workspace ws(CartanType::parse("B3"));
  EnumerationOptions one, four;
  four.threads = 4;
  const auto p = ParabolicIndex::maximal(3, 1);
  EXPECT_EQ(enumerate_tuples(ws, p, 3, SystemMode::Deformed, one), enumerate_tuples(ws, p, 3, SystemMode::Deformed, four));
}

TEST(GenerateSystem, DeformedIsSubsetOfClassical) {
  for (const auto& label : {"B3", "C3", "G2", "B2"}) {
    Workspace ws(CartanType::parse(label));
    const auto b = generate_system(ws, 3, SystemMode::Classical);
    const auto bp = generate_system(ws, 3, SystemMode::Deformed);
    std::set<std::pair<int, std::vector<ElementId>>> tuples;
    for (const auto& f : b.inequalities) tuples.insert({f.maximal, f.tuple});
    for (const auto& f : bp.inequalities) EXPECT_TRUE(tuples.count({f.maximal, f.tuple})) << label;
  }
}

TEST(GenerateSystem, ModesAgreeForTypeA) {
  for (const auto& label : {"A2", "A3"}) {
    Workspace ws(CartanType::parse(label));
    const auto b = generate_system(ws, 3, SystemMode::Classical);
    const auto bp = generate_system(ws, 3, SystemMode::Deformed);
    ASSERT_EQ(b.inequalities.size(), bp.inequalities.size());
    for (std::size_t k = 0; k < b.inequalities.size(); ++k) EXPECT_EQ(b.inequalities[k].tuple, bp.inequalities[k].tuple);
  }
}

// A2, s = 3: the cone of (h1, h2, h3) with h1 + h2 + h3 = 0 in su(3),
// compared with the classical Horn inequalities on eigenvalues.
TEST(Evaluate, A2MatchesHornTriangleInequalities) {
  Workspace ws(CartanType::parse("A2"));
  const auto sys = generate_system(ws, 3, SystemMode::Classical);
  EXPECT_EQ(sys.inequalities.size(), 12u);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 6);
  int members = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // Eigenvalues (a1 >= a2 >= a3), traceless after scaling by 3.
    std::vector<std::array<Rational, 3>> eig;
    std::vector<Coweight> h;
    for (int j = 0; j < 3; ++j) {
      const int p = d(rng), q = d(rng);
      h.push_back(from_values(ws.roots(), {p, q}));
      // alpha_1(h) = a1 - a2, alpha_2(h) = a2 - a3, a1 + a2 + a3 = 0.
      const Rational a2 = Rational(q - p, 3);
      eig.push_back({a2 + p, a2, a2 - q});
    }
    // Horn's inequalities for A + B = -C with C's eigenvalues c: n = 3, r = 1, 2.
    auto horn = [&] {
      const auto& a = eig[0];
      const auto& b = eig[1];
      std::array<Rational, 3> c = {-eig[2][2], -eig[2][1], -eig[2][0]};
      // r = 1: c_{i+j-1} <= a_i + b_j.
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i + j <= 2 && c[i + j] > a[i] + b[j]) return false;
      // r = 2: (I, J, K) triples for n = 3.
      const std::vector<std::array<std::array<int, 2>, 3>> triples = {
          {{{0, 1}, {0, 1}, {0, 1}}}, {{{0, 1}, {0, 2}, {0, 2}}}, {{{0, 2}, {0, 1}, {0, 2}}},
          {{{0, 1}, {1, 2}, {1, 2}}}, {{{1, 2}, {0, 1}, {1, 2}}}, {{{0, 2}, {0, 2}, {1, 2}}}};
      for (const auto& t : triples)
        if (c[t[2][0]] + c[t[2][1]] > a[t[0][0]] + a[t[0][1]] + b[t[1][0]] + b[t[1][1]]) return false;
      return true;
    };
    const bool expect = horn();
    const auto v = evaluate(ws.roots(), sys, h);
    EXPECT_EQ(v.member, expect) << trial;
    members += v.member;
  }
  EXPECT_GT(members, 0);
  EXPECT_LT(members, 400);
}

TEST(Evaluate, ZeroAndConjugatePairsAndScaling) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 9);
  for (const auto& label : {"B3", "C3", "G2", "A3"}) {
    Workspace ws(CartanType::parse(label));
    const auto& rs = ws.roots();
    const auto sys = generate_system(ws, 3, SystemMode::Deformed);
    const Coweight zero{RatVector(rs.rank(), Rational(0))};
    EXPECT_TRUE(evaluate(rs, sys, {zero, zero, zero}).member);
    for (int trial = 0; trial < 20; ++trial) {
      RatVector vals;
      for (int i = 0; i < rs.rank(); ++i) vals.push_back(Rational(d(rng), 1 + d(rng)));
      const Coweight h = from_values(rs, vals);
      const auto v = evaluate(rs, sys, {h, dual_coweight(ws.group(), h), zero});
      EXPECT_TRUE(v.member) << label;
      // Scaling a non-member keeps it outside.
      const Coweight big = from_values(rs, RatVector(rs.rank(), Rational(1)));
      const std::vector<Coweight> out = {big, zero, zero};
      EXPECT_FALSE(evaluate(rs, sys, out).member);
      const Rational c(d(rng) + 1, 7);
      EXPECT_FALSE(evaluate(rs, sys, {c * big, zero, zero}).member);
    }
  }
}

TEST(Evaluate, RejectsNonDominant) {
  Workspace ws(CartanType::parse("B3"));
  const auto sys = generate_system(ws, 3, SystemMode::Classical);
  const auto& rs = ws.roots();
  const Coweight zero{RatVector(3, Rational(0))};
  EXPECT_THROW(evaluate(rs, sys, {from_values(rs, {1, -1, 0}), zero, zero}), InvalidInput);
  EXPECT_THROW(evaluate(rs, sys, {zero, zero}), InvalidInput);
}

TEST(Evaluate, TwoTupleSystemIsTheDualPairCondition) {
  Workspace ws(CartanType::parse("C3"));
  const auto& rs = ws.roots();
  const auto& g = ws.group();
  const auto sys = generate_system(ws, 2, SystemMode::Classical);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    RatVector a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(d(rng));
      b.push_back(d(rng));
    }
    const Coweight h1 = from_values(rs, a), h2 = from_values(rs, b);
    bool expect = true;
    for (int i = 0; i < 3; ++i) {
      const auto p = ParabolicIndex::maximal(3, i);
      const auto& q = ws.quotient(p);
      const Weight omega = rs.fundamental_weight(i);
      for (int k = 0; k < static_cast<int>(q.size()); ++k) {
        const Coweight x = g.act(g.inverse(q.element(k)), h1) + g.act(g.inverse(q.element(q.dual(k))), h2);
        if (rs.pair(omega, x) > 0) expect = false;
      }
    }
    EXPECT_EQ(evaluate(rs, sys, {h1, h2}).member, expect);
    // Membership for s = 2 means h2 = -w_o h1.
    EXPECT_EQ(expect, h2 == dual_coweight(g, h1));
  }
}

// Sequential pruning replayed with the double-description oracle.
void expect_pruning_matches_oracle(const InequalitySystem& sys) {
  const auto pruned = prune_redundant(sys);
  const int dim = sys.s * sys.type.rank;
  std::vector<bool> removed(sys.inequalities.size(), false);
  for (std::size_t k = 0; k < sys.inequalities.size(); ++k) {
    std::vector<RatVector> given;
    for (std::size_t j = 0; j < sys.inequalities.size(); ++j)
      if (j != k && !removed[j]) given.push_back(flatten(sys.inequalities[j]));
    removed[k] = oracle::implied_by_rays(given, flatten(sys.inequalities[k]), dim);
    ASSERT_EQ(removed[k], pruned.inequalities[k].redundant) << sys.type.label() << " s=" << sys.s << " k=" << k;
  }
}

TEST(PruneRedundant, MatchesDoubleDescriptionOracle) {
  for (const auto& label : {"A2", "B2", "G2", "B3", "C3"}) {
    Workspace ws(CartanType::parse(label));
    expect_pruning_matches_oracle(generate_system(ws, 2, SystemMode::Classical));
  }
  for (const auto& label : {"A2", "B2", "G2"}) {
    Workspace ws(CartanType::parse(label));
    expect_pruning_matches_oracle(generate_system(ws, 3, SystemMode::Classical));
    expect_pruning_matches_oracle(generate_system(ws, 3, SystemMode::Deformed));
  }
}

TEST(PruneRedundant, WitnessesAreGenuine) {
  Workspace ws(CartanType::parse("B3"));
  const auto sys = prune_redundant(generate_system(ws, 3, SystemMode::Deformed));
  EXPECT_EQ(sys.redundant_count(), 0u);
  for (std::size_t k = 0; k < sys.inequalities.size(); ++k) {
    std::vector<RatVector> given;
    for (std::size_t j = 0; j < sys.inequalities.size(); ++j)
      if (j != k) given.push_back(flatten(sys.inequalities[j]));
    const auto x = violation_witness(given, flatten(sys.inequalities[k]));
    ASSERT_TRUE(x.has_value());
    // Re-evaluate the witness as coweights.
    std::vector<Coweight> h;
    for (int j = 0; j < 3; ++j) h.push_back(from_values(ws.roots(), RatVector(x->begin() + 3 * j, x->begin() + 3 * j + 3)));
    const auto v = evaluate(ws.roots(), sys, h);
    ASSERT_EQ(v.violated.size(), 1u);
    EXPECT_EQ(v.violated[0].first, k);
  }
}

TEST(PruneRedundant, RespectsBudget) {
  Workspace ws(CartanType::parse("B3"));
  EXPECT_THROW(prune_redundant(generate_system(ws, 3, SystemMode::Deformed), 6), BudgetExceeded);
}

TEST(Json, RoundTripAndValidation) {
  Workspace ws(CartanType::parse("C3"));
  const auto sys = prune_redundant(generate_system(ws, 3, SystemMode::Classical));
  const auto text = to_json(ws.group(), sys);
  const auto back = system_from_json(ws.group(), text);
  EXPECT_EQ(to_json(ws.group(), back), text);
  EXPECT_EQ(back.redundant_count(), sys.redundant_count());
  auto bad = text;
  const auto pos = bad.find("\"functional\"");
  const auto digit = bad.find_first_of("123456789", pos);
  bad[digit] = bad[digit] == '9' ? '8' : static_cast<char>(bad[digit] + 1);
  EXPECT_THROW(system_from_json(ws.group(), bad), InvalidInput);
  EXPECT_THROW(system_from_json(ws.group(), "{"), InvalidInput);
  Workspace other(CartanType::parse("B3"));
  EXPECT_THROW(system_from_json(other.group(), text), InvalidInput);
}

}  // namespace
}  // namespace flagcoh
