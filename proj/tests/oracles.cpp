#include "oracles.hpp"

#include <algorithm>

namespace flagcoh::oracle {

namespace {

using Poly2 = std::map<std::pair<int, int>, std::int64_t>;

Poly2 mul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) r[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// s_(a,b)(x1,x2) = sum_{k=b}^{a} x1^k x2^{a+b-k}
Poly2 schur(Partition p) {
  Poly2 r;
  for (int k = p.second; k <= p.first; ++k) r[{k, p.first + p.second - k}] += 1;
  return r;
}

}  // namespace

std::map<Partition, std::int64_t> gr24_product(Partition a, Partition b) {
  Poly2 prod = mul(mul(schur(a), schur(b)), Poly2{{{1, 0}, 1}, {{0, 1}, -1}});
  std::map<Partition, std::int64_t> out;
  for (const auto& [m, c] : prod) {
    if (m.first <= m.second) continue;
    Partition lambda{m.first - 1, m.second};
    if (lambda.first > 2) continue;
    out[lambda] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Partition gr24_partition(const WeylGroup& group, ElementId w) {
  std::vector<int> perm = {1, 2, 3, 4};
  // w = s_{i1} ... s_{ik}; as a permutation of positions, apply right to left.
  for (int i : group.reduced_word(w)) std::swap(perm[i], perm[i + 1]);
  // perm now lists w(1..4) after the composition in word order.
  std::vector<int> first = {perm[0], perm[1]};
  std::sort(first.begin(), first.end());
  return {first[1] - 2, first[0] - 1};
}

Polynomial act(const WeylGroup& group, ElementId w, const Polynomial& f) {
  Polynomial r = f;
  auto word = group.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(group.roots(), *it, r);
  return r;
}

namespace {

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(vars, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      e[pos] = left;
      out.push_back(Polynomial::pack(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial monomial(int vars, Monomial m) {
  Polynomial p(vars);
  p.add(m, 1);
  return p;
}

}  // namespace

std::map<ElementId, Rational> basis_expansion(const SchubertPolynomials& polys, ElementId u, ElementId v) {
  const WeylGroup& g = polys.group();
  const int n = g.rank();
  const int d = g.length(u) + g.length(v);
  Polynomial target = polys[u] * polys[v];

  // Generators of the degree-d part of the invariant ideal.
  std::vector<Polynomial> columns;
  std::vector<ElementId> basis;
  for (ElementId w = 0; w < g.size(); ++w)
    if (g.length(w) == d) {
      columns.push_back(polys[w]);
      basis.push_back(w);
    }
  for (int e = 1; e <= d; ++e) {
    for (Monomial m : monomials_of_degree(n, e)) {
      Polynomial inv(n);
      for (ElementId w = 0; w < g.size(); ++w) inv += act(g, w, monomial(n, m));
      if (inv.is_zero()) continue;
      for (Monomial m2 : monomials_of_degree(n, d - e)) columns.push_back(inv * monomial(n, m2));
    }
  }
  // Gaussian elimination on [columns | target] over the monomials of degree d.
  std::vector<Monomial> rows = monomials_of_degree(n, d);
  const std::size_t nc = columns.size();
  std::vector<std::vector<Rational>> mat(rows.size(), std::vector<Rational>(nc + 1, Rational(0)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < nc; ++c) {
      auto it = columns[c].terms().find(rows[r]);
      if (it != columns[c].terms().end()) mat[r][c] = it->second;
    }
    auto it = target.terms().find(rows[r]);
    if (it != target.terms().end()) mat[r][nc] = it->second;
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < rows.size(); ++c) {
    std::size_t p = row;
    while (p < rows.size() && mat[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(mat[p], mat[row]);
    const Rational piv = mat[row][c];
    for (auto& x : mat[row]) x /= piv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || mat[r][c] == 0) continue;
      const Rational f = mat[r][c];
      for (std::size_t k = 0; k <= nc; ++k) mat[r][k] -= f * mat[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  for (std::size_t r = row; r < rows.size(); ++r) FLAGCOH_CHECK(mat[r][nc] == 0, "basis expansion inconsistent");
  std::map<ElementId, Rational> out;
  // The Schubert polynomial columns come first; they are independent modulo
  // the ideal, so each is a pivot and its solved value is unique.
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const int c = pivot_col[r];
    if (c < static_cast<int>(basis.size()) && mat[r][nc] != 0) out[basis[c]] = mat[r][nc];
  }
  return out;
}

}  // namespace flagcoh::oracle

namespace flagcoh::oracle {

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ray {
  RatVector x;
  std::vector<bool> zero;  // tight constraints among those processed
};

}  // namespace

std::vector<RatVector> extreme_rays(const std::vector<RatVector>& rows, int dim) {
  // Constraints as g.x >= 0: first the coordinates, then -a.
  std::vector<RatVector> cons;
  for (int i = 0; i < dim; ++i) {
    RatVector e(dim, Rational(0));
    e[i] = 1;
    cons.push_back(e);
  }
  for (const auto& a : rows) {
    RatVector g = a;
    for (auto& v : g) v = -v;
    cons.push_back(g);
  }
  const std::size_t total = cons.size();
  std::vector<Ray> rays;
  for (int i = 0; i < dim; ++i) {
    Ray r{RatVector(dim, Rational(0)), std::vector<bool>(total, false)};
    r.x[i] = 1;
    for (int j = 0; j < dim; ++j) r.zero[j] = j != i;
    rays.push_back(r);
  }
  for (std::size_t c = dim; c < total; ++c) {
    std::vector<Ray> pos, neg, next;
    std::vector<Rational> val;
    for (auto& r : rays) {
      const Rational v = dot(cons[c], r.x);
      if (v == 0) {
        r.zero[c] = true;
        next.push_back(r);
      } else if (v > 0) {
        pos.push_back(r);
      } else {
        neg.push_back(r);
      }
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        std::vector<bool> common(total);
        int count = 0;
        for (std::size_t k = 0; k < c; ++k) count += common[k] = p.zero[k] && n.zero[k];
        if (count < dim - 2) continue;
        bool adjacent = true;
        for (const auto& o : rays) {
          bool contains = true;
          for (std::size_t k = 0; k < c && contains; ++k)
            if (common[k] && !o.zero[k]) contains = false;
          if (contains && o.x != p.x && o.x != n.x) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        const Rational vp = dot(cons[c], p.x), vn = dot(cons[c], n.x);
        Ray r{RatVector(dim), common};
        for (int i = 0; i < dim; ++i) r.x[i] = vp * n.x[i] - vn * p.x[i];
        r.zero[c] = true;
        next.push_back(r);
      }
    for (auto& p : pos) next.push_back(p);
    rays = std::move(next);
  }
  std::vector<RatVector> out;
  for (const auto& r : rays) out.push_back(r.x);
  return out;
}

bool implied_by_rays(const std::vector<RatVector>& rows, const RatVector& f, int dim) {
  for (const auto& r : extreme_rays(rows, dim))
    if (dot(f, r) > 0) return false;
  return true;
}

}  // namespace flagcoh::oracle
