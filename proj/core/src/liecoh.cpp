#include "flagcoh/liecoh.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace flagcoh {

namespace {

// Pairs (a, b, a+b) of positive-root indices with a < b.
std::vector<std::array<int, 3>> sums(const RootSystem& rs) {
  std::vector<std::array<int, 3>> out;
  const auto& roots = rs.positive_roots();
  for (int a = 0; a < rs.num_positive_roots(); ++a)
    for (int b = a + 1; b < rs.num_positive_roots(); ++b) {
      IntVector s(roots[a].size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = roots[a][i] + roots[b][i];
      const int c = rs.positive_root_index(s);
      if (c >= 0) out.push_back({a, b, c});
    }
  return out;
}

std::string word_string(const WeylGroup& g, ElementId w) {
  std::string s;
  for (int i : g.reduced_word(w)) s += std::to_string(i + 1);
  return s.empty() ? "e" : s;
}

}  // namespace

bool is_closed(const RootSystem& rs, const RootSet& s) {
  for (const auto& [a, b, c] : sums(rs))
    if (s.test(a) && s.test(b) && !s.test(c)) return false;
  return true;
}

bool is_coclosed(const RootSystem& rs, const RootSet& s) {
  for (const auto& [a, b, c] : sums(rs))
    if (!s.test(a) && !s.test(b) && s.test(c)) return false;
  return true;
}

std::optional<ElementId> is_inversion_set(const WeylGroup& group, const RootSet& s) {
  const auto& rs = group.roots();
  for (int k = rs.num_positive_roots(); k < static_cast<int>(s.size()); ++k)
    if (s.test(k)) throw InvalidInput("root set mentions indices beyond R^+");
  if (!is_closed(rs, s) || !is_coclosed(rs, s)) return std::nullopt;
  auto w = group.from_inversion_set(s);
  FLAGCOH_CHECK(w.has_value(), "closed and coclosed set without a Weyl element");
  return w;
}

CohomClass leviprod0(const WeylGroup& group, ElementId u, ElementId v) {
  CohomClass out{ParabolicIndex::borel(), ClassBasis::Dual, {}};
  const RootSet& a = group.inversions(u);
  const RootSet& b = group.inversions(v);
  if ((a & b).any()) return out;
  if (auto w = group.from_inversion_set(a | b)) out.coeffs[*w] = 1;
  return out;
}

CohomClass chevalley0(const WeylGroup& group, int i, ElementId v) {
  const auto& rs = group.roots();
  if (i < 0 || i >= rs.rank()) throw InvalidInput("simple root index out of range");
  CohomClass out{ParabolicIndex::borel(), ClassBasis::Dual, {}};
  const IntVector image = group.act(v, rs.positive_roots()[rs.simple_root_index(i)]);
  for (int j = 0; j < rs.rank(); ++j)
    if (rs.positive_root_index(image) == rs.simple_root_index(j)) out.coeffs[group.right_mul(v, i)] = 1;
  return out;
}

std::vector<ElementId> commuting_products(const WeylGroup& group) {
  const auto& rs = group.roots();
  const int n = rs.rank();
  std::vector<ElementId> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool commuting = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((mask >> i) & 1u) && ((mask >> j) & 1u) && rs.cartan()[i][j] != 0) commuting = false;
    if (!commuting) continue;
    std::vector<int> word;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) word.push_back(i);
    out.push_back(group.from_word(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_levi_dominant(const RootSystem& rs, const ParabolicIndex& p, const Weight& lambda) {
  for (int i : p.levi_simples(rs.rank()))
    if (rs.pair(lambda, rs.simple_coroot(i)) < 0) return false;
  return true;
}

std::vector<KostantModule> kostant_decomposition(const ParabolicQuotient& quotient, int degree) {
  const WeylGroup& g = quotient.group();
  const auto& rs = g.roots();
  std::vector<KostantModule> out;
  for (int k = 0; k < static_cast<int>(quotient.size()); ++k) {
    if (quotient.length(k) != degree) continue;
    const ElementId w = quotient.element(k);
    Weight hw = rs.to_root_basis(g.act(g.inverse(w), rs.rho())) - rs.rho();
    FLAGCOH_CHECK(is_levi_dominant(rs, quotient.parabolic(), hw), "Kostant weight is not Levi-dominant");
    out.push_back({w, degree, hw});
  }
  return out;
}

CrosscheckReport crosscheck_gb(const Workspace& ws) {
  const WeylGroup& g = ws.group();
  const ParabolicIndex borel = ParabolicIndex::borel();
  const auto& q = ws.quotient(borel);
  const auto& table = ws.deformed(borel);
  CrosscheckReport r;
  r.label = ws.roots().label();
  // epsilon_u = [Lambda-bar_{w_o u}] on G/B.
  for (ElementId u = 0; u < g.size(); ++u) {
    for (ElementId v = 0; v < g.size(); ++v) {
      ++r.pairs;
      const int a = q.index_of(g.multiply(g.longest(), u));
      const int b = q.index_of(g.multiply(g.longest(), v));
      CohomClass got{borel, ClassBasis::Dual, {}};
      for (const auto& t : table.product(a, b)) {
        if (std::any_of(t.exponent.begin(), t.exponent.end(), [](int e) { return e != 0; })) continue;
        got.coeffs[g.multiply(g.longest(), q.element(t.index))] += t.coeff;
      }
      const CohomClass expect = leviprod0(g, u, v);
      if (got == expect) {
        ++r.agreeing;
      } else if (!r.first_mismatch) {
        r.first_mismatch = {u, v};
        std::ostringstream d;
        d << "u=" << word_string(g, u) << " v=" << word_string(g, v) << ": deformed product gives";
        for (const auto& [w, c] : got.coeffs) d << " " << c << "*e[" << word_string(g, w) << "]";
        d << "; inversion-set rule gives";
        for (const auto& [w, c] : expect.coeffs) d << " " << c << "*e[" << word_string(g, w) << "]";
        r.detail = d.str();
      }
    }
  }
  return r;
}

}  // namespace flagcoh
