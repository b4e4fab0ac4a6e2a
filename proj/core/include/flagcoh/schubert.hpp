#pragma once

// Cup-product structure constants of H^*(G/P) in the Schubert basis, from
// BGG polynomial representatives and divided differences.

#include "flagcoh/polynomial.hpp"
#include "flagcoh/weyl.hpp"

#include <map>
#include <vector>

namespace flagcoh {

/// BGG representatives: P_{w_o} = prod(R^+)/|W|, P_{w s_i} = d_i P_w when
/// l(w s_i) < l(w). P_w represents epsilon_w (degree l(w)).
class SchubertPolynomials {
 public:
  explicit SchubertPolynomials(const WeylGroup& group);

  const WeylGroup& group() const { return *group_; }
  const Polynomial& operator[](ElementId w) const { return polys_[w]; }

 private:
  const WeylGroup* group_;
  std::vector<Polynomial> polys_;
};

/// d_w f for every w of length exactly `degree`, where d_w = d_{i1}...d_{ik}
/// for a reduced word w = s_{i1}...s_{ik}. Returns one polynomial per
/// element id (zero for other lengths).
std::vector<Polynomial> divided_difference_ladder(const WeylGroup& group, const Polynomial& f, int degree);

struct Term {
  int index = 0;  // position in W^P
  std::int64_t coeff = 0;

  bool operator==(const Term&) const = default;
};

/// epsilon^P_a * epsilon^P_b = sum_c c^c_{a,b} epsilon^P_c, indices into W^P.
class ProductTable {
 public:
  ProductTable() = default;
  ProductTable(const ParabolicQuotient& quotient, std::vector<std::vector<Term>> entries);

  /// Computes all constants by restricting G/B constants to W^P.
  static ProductTable compute(const ParabolicQuotient& quotient, const SchubertPolynomials& polys, int threads = 1);

  std::size_t size() const { return size_; }
  const std::vector<Term>& product(int a, int b) const { return entries_[a * size_ + b]; }
  std::int64_t coefficient(int a, int b, int c) const;
  const std::vector<std::vector<Term>>& entries() const { return entries_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::vector<Term>> entries_;
};

enum class ClassBasis { Schubert, Dual };  // [Lambda-bar^P_w] or epsilon^P_w

/// Integer combination of basis classes of H^*(G/P), keyed by W^P element.
struct CohomClass {
  ParabolicIndex parabolic;
  ClassBasis basis = ClassBasis::Dual;
  std::map<ElementId, BigInt> coeffs;

  bool operator==(const CohomClass&) const = default;
};

/// Re-expresses c in the requested basis using [Lambda-bar_w] = epsilon_{w_o w w_o^P}.
CohomClass convert(const ParabolicQuotient& quotient, const CohomClass& c, ClassBasis target);
CohomClass multiply(const ParabolicQuotient& quotient, const ProductTable& table, const CohomClass& a,
                    const CohomClass& b);

/// Element s_beta for a positive root index.
ElementId reflection_element(const WeylGroup& group, int root_index);

/// epsilon_{s_i} * epsilon_w = sum <omega_i, beta^vee> epsilon_{w s_beta} over
/// beta > 0 with l(w s_beta) = l(w) + 1, restricted to W^P. Requires w in W^P
/// and alpha_i outside Delta(P).
CohomClass chevalley_oracle(const ParabolicQuotient& quotient, int i, ElementId w);

}  // namespace flagcoh
