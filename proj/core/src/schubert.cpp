#include "flagcoh/schubert.hpp"

#include "flagcoh/parallel.hpp"

#include <algorithm>

namespace flagcoh {

namespace {

std::int64_t narrow(const Rational& q) {
  FLAGCOH_CHECK(denominator(q) == 1, "non-integral structure constant " + to_string(q));
  const BigInt n = numerator(q);
  FLAGCOH_CHECK(n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max(),
                "structure constant exceeds 64 bits");
  return static_cast<std::int64_t>(n);
}

}  // namespace

SchubertPolynomials::SchubertPolynomials(const WeylGroup& group) : group_(&group), polys_(group.size()) {
  const auto& rs = group.roots();
  Polynomial top = positive_root_product(rs);
  top *= Rational(1, static_cast<long>(group.size()));
  polys_[group.longest()] = top;
  std::vector<bool> done(group.size(), false);
  done[group.longest()] = true;
  for (ElementId w = static_cast<ElementId>(group.size()); w-- > 0;) {
    if (done[w]) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      ElementId up = group.right_mul(w, i);
      if (group.length(up) > group.length(w)) {
        FLAGCOH_CHECK(done[up], "BGG recursion out of order");
        polys_[w] = divided_difference(rs, i, polys_[up]);
        done[w] = true;
        break;
      }
    }
  }
}

std::vector<Polynomial> divided_difference_ladder(const WeylGroup& group, const Polynomial& f, int degree) {
  const auto& rs = group.roots();
  std::vector<Polynomial> value(group.size(), Polynomial(rs.rank()));
  std::vector<bool> nonzero(group.size(), false);
  value[group.identity()] = f;
  nonzero[group.identity()] = !f.is_zero();
  for (ElementId w = 1; w < group.size() && group.length(w) <= degree; ++w) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (!group.is_left_descent(w, i)) continue;
      ElementId below = group.left_mul(i, w);
      if (nonzero[below]) {
        value[w] = divided_difference(rs, i, value[below]);
        nonzero[w] = !value[w].is_zero();
      }
      break;
    }
  }
  for (ElementId w = 0; w < group.size(); ++w)
    if (group.length(w) != degree) value[w] = Polynomial(rs.rank());
  return value;
}

ProductTable::ProductTable(const ParabolicQuotient& quotient, std::vector<std::vector<Term>> entries)
    : size_(quotient.size()), entries_(std::move(entries)) {
  FLAGCOH_CHECK(entries_.size() == size_ * size_, "product table shape mismatch");
}

ProductTable ProductTable::compute(const ParabolicQuotient& quotient, const SchubertPolynomials& polys,
                                   int threads) {
  const WeylGroup& g = quotient.group();
  const std::size_t m = quotient.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < static_cast<int>(m); ++a)
    for (int b = a; b < static_cast<int>(m); ++b)
      if (quotient.length(a) + quotient.length(b) <= quotient.dimension()) pairs.emplace_back(a, b);
  std::vector<std::vector<Term>> entries(m * m);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const int degree = quotient.length(a) + quotient.length(b);
    Polynomial f = polys[quotient.element(a)] * polys[quotient.element(b)];
    auto ladder = divided_difference_ladder(g, f, degree);
    std::vector<Term> terms;
    for (ElementId w = 0; w < g.size(); ++w) {
      if (g.length(w) != degree || ladder[w].is_zero()) continue;
      FLAGCOH_CHECK(ladder[w].degree() == 0, "divided difference ladder did not reach a constant");
      const std::int64_t c = narrow(ladder[w].constant_term());
      if (c == 0) continue;
      const int idx = quotient.index_of(w);
      FLAGCOH_CHECK(idx >= 0, "product of pulled-back classes left W^P");
      terms.push_back({idx, c});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
    entries[a * m + b] = terms;
    if (a != b) entries[b * m + a] = std::move(terms);
  });
  return ProductTable(quotient, std::move(entries));
}

std::int64_t ProductTable::coefficient(int a, int b, int c) const {
  for (const auto& t : product(a, b))
    if (t.index == c) return t.coeff;
  return 0;
}

CohomClass convert(const ParabolicQuotient& quotient, const CohomClass& c, ClassBasis target) {
  if (c.basis == target) return c;
  CohomClass out{c.parabolic, target, {}};
  for (const auto& [w, x] : c.coeffs) {
    const int k = quotient.index_of(w);
    if (k < 0) throw InvalidInput("class supported outside W^P");
    out.coeffs[quotient.element(quotient.dual(k))] = x;
  }
  return out;
}

CohomClass multiply(const ParabolicQuotient& quotient, const ProductTable& table, const CohomClass& a,
                    const CohomClass& b) {
  const CohomClass x = convert(quotient, a, ClassBasis::Dual);
  const CohomClass y = convert(quotient, b, ClassBasis::Dual);
  CohomClass out{quotient.parabolic(), ClassBasis::Dual, {}};
  for (const auto& [u, cu] : x.coeffs) {
    const int iu = quotient.index_of(u);
    if (iu < 0) throw InvalidInput("class supported outside W^P");
    for (const auto& [v, cv] : y.coeffs) {
      const int iv = quotient.index_of(v);
      if (iv < 0) throw InvalidInput("class supported outside W^P");
      for (const auto& t : table.product(iu, iv)) out.coeffs[quotient.element(t.index)] += cu * cv * t.coeff;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return convert(quotient, out, a.basis);
}

ElementId reflection_element(const WeylGroup& group, int root_index) {
  const auto& rs = group.roots();
  IntVector beta = rs.positive_roots().at(root_index);
  std::vector<int> conj;
  // Walk beta down to a simple root: s_beta = s_{i1}...s_{ik} s_j s_{ik}...s_{i1}.
  while (true) {
    int simple = -1;
    for (int j = 0; j < rs.rank(); ++j)
      if (rs.positive_root_index(beta) == rs.simple_root_index(j)) simple = j;
    if (simple >= 0) {
      std::vector<int> word = conj;
      word.push_back(simple);
      word.insert(word.end(), conj.rbegin(), conj.rend());
      return group.from_word(word);
    }
    int step = -1;
    for (int i = 0; i < rs.rank() && step < 0; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < rs.rank(); ++j) p += beta[j] * rs.cartan()[i][j];
      if (p > 0) step = i;
    }
    FLAGCOH_CHECK(step >= 0, "no descending reflection for a non-simple root");
    beta = rs.reflect(step, beta);
    conj.push_back(step);
  }
}

CohomClass chevalley_oracle(const ParabolicQuotient& quotient, int i, ElementId w) {
  const WeylGroup& g = quotient.group();
  const auto& rs = g.roots();
  const ParabolicIndex& p = quotient.parabolic();
  if (i < 0 || i >= rs.rank() || p.contains(i)) throw InvalidInput("simple root must lie outside Delta(P)");
  if (quotient.index_of(w) < 0) throw InvalidInput("element not in W^P");
  CohomClass out{p, ClassBasis::Dual, {}};
  const std::int64_t norm_i = rs.gram()[i][i];
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const auto& beta = rs.positive_roots()[k];
    const ElementId x = g.multiply(w, reflection_element(g, k));
    if (g.length(x) != g.length(w) + 1 || quotient.index_of(x) < 0) continue;
    // <omega_i, beta^vee> = beta_i (alpha_i, alpha_i) / (beta, beta)
    const Rational c = Rational(beta[i] * norm_i, rs.inner(beta, beta));
    FLAGCOH_CHECK(denominator(c) == 1, "non-integral Chevalley coefficient");
    if (c != 0) out.coeffs[x] += numerator(c);
  }
  return out;
}

}  // namespace flagcoh
