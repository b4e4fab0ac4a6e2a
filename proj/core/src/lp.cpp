#include "flagcoh/lp.hpp"

namespace flagcoh {

namespace {

// x_basic[i] = value[i] + sum_j coef[i][j] * x_nonbasic[j]; objective likewise.
// Variables 0..n-1 are the unknowns, n..n+m-1 the slacks, n+m the auxiliary x_0.
struct Dictionary {
  std::vector<int> basic;
  std::vector<int> nonbasic;
  RatMatrix coef;
  RatVector value;
  RatVector obj;
  Rational obj_value;

  void pivot(int r, int e) {
    const Rational d = coef[r][e];
    // Solve row r for the entering variable.
    RatVector row = coef[r];
    const Rational val = -value[r] / d;
    for (auto& x : row) x = -x / d;
    row[e] = 1 / d;
    std::swap(basic[r], nonbasic[e]);
    coef[r] = row;
    value[r] = val;
    auto substitute = [&](RatVector& c, Rational& v) {
      const Rational f = c[e];
      if (f == 0) return;
      c[e] = 0;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (row[j] != 0) c[j] += f * row[j];
      v += f * val;
    };
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (static_cast<int>(i) != r) substitute(coef[i], value[i]);
    substitute(obj, obj_value);
  }

  // Maximizes the objective with Bland's rule. The problem is bounded here.
  void optimize() {
    while (true) {
      int e = -1;
      for (std::size_t j = 0; j < nonbasic.size(); ++j)
        if (obj[j] > 0 && (e < 0 || nonbasic[j] < nonbasic[e])) e = static_cast<int>(j);
      if (e < 0) return;
      int r = -1;
      Rational best;
      for (std::size_t i = 0; i < basic.size(); ++i) {
        if (coef[i][e] >= 0) continue;
        const Rational ratio = value[i] / -coef[i][e];
        if (r < 0 || ratio < best || (ratio == best && basic[i] < basic[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      FLAGCOH_CHECK(r >= 0, "unbounded auxiliary problem");
      pivot(r, e);
    }
  }
};

}  // namespace

std::optional<RatVector> find_feasible_point(const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  FLAGCOH_CHECK(b.size() == m, "row count mismatch");
  Dictionary d;
  const int aux = static_cast<int>(n + m);
  for (std::size_t j = 0; j < n; ++j) d.nonbasic.push_back(static_cast<int>(j));
  d.nonbasic.push_back(aux);
  for (std::size_t i = 0; i < m; ++i) {
    FLAGCOH_CHECK(a[i].size() == n, "ragged constraint matrix");
    d.basic.push_back(static_cast<int>(n + i));
    RatVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = -a[i][j];
    row[n] = 1;
    d.coef.push_back(std::move(row));
    d.value.push_back(b[i]);
  }
  d.obj.assign(n + 1, Rational(0));
  d.obj[n] = -1;

  int worst = -1;
  for (std::size_t i = 0; i < m; ++i)
    if (d.value[i] < 0 && (worst < 0 || d.value[i] < d.value[worst])) worst = static_cast<int>(i);
  if (worst >= 0) {
    d.pivot(worst, static_cast<int>(n));
    d.optimize();
    if (d.obj_value < 0) return std::nullopt;
  }
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (d.basic[i] < static_cast<int>(n)) x[d.basic[i]] = d.value[i];
  return x;
}

}  // namespace flagcoh
