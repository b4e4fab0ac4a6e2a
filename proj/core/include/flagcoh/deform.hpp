#pragma once

// Deformed product on H^*(G/P): the characters chi_w, the tau-graded product
// in the Schubert basis, its specialization at tau = 0 and the numerical
// L-movability criterion.

#include "flagcoh/schubert.hpp"

#include <map>
#include <string>
#include <vector>

namespace flagcoh {

class Workspace;

/// chi_w as the sum of (R^+ \ R^+_l) cap w^{-1} R^+, root basis. Throws
/// InternalError if it differs from rho - 2 rho^L + w^{-1} rho.
Weight chi(const WeylGroup& group, const ParabolicIndex& p, ElementId w);

/// chi_w for every w in W^P.
class CharacterTable {
 public:
  explicit CharacterTable(const ParabolicQuotient& quotient);

  /// Root coordinates of chi_{w_k}.
  const IntVector& chi(int k) const { return chi_[k]; }
  /// Delta \ Delta(P), 0-based; the deformation variables tau_i.
  const std::vector<int>& outside() const { return outside_; }
  /// chi_{w_k}(x_i) for i in outside().
  std::vector<std::int64_t> at_outside(int k) const;

 private:
  std::vector<IntVector> chi_;
  std::vector<int> outside_;
};

/// One exponent per deformation variable, in CharacterTable::outside() order.
using TauExponent = std::vector<int>;

struct DeformedTerm {
  int index = 0;  // W^P position of the Schubert class [Lambda-bar_w]
  std::int64_t coeff = 0;
  TauExponent exponent;

  bool operator==(const DeformedTerm&) const = default;
};

/// [Lambda-bar_a] (.) [Lambda-bar_b] in the Schubert basis, W^P positions.
class DeformedTable {
 public:
  DeformedTable(const ParabolicQuotient& quotient, const ProductTable& table, const CharacterTable& chars);

  std::size_t size() const { return size_; }
  const std::vector<int>& outside() const { return outside_; }
  const std::vector<DeformedTerm>& product(int a, int b) const { return entries_[a * size_ + b]; }

 private:
  std::size_t size_ = 0;
  std::vector<int> outside_;
  std::vector<std::vector<DeformedTerm>> entries_;
};

/// Schubert-basis combination with coefficients in Z[tau_i].
struct DeformedClass {
  ParabolicIndex parabolic;
  std::vector<int> outside;
  std::map<ElementId, std::map<TauExponent, BigInt>> coeffs;

  bool operator==(const DeformedClass&) const = default;
  bool is_zero() const { return coeffs.empty(); }
};

DeformedClass schubert_class(const Workspace& ws, const ParabolicIndex& p, ElementId w);
DeformedClass deformed_product(const Workspace& ws, const ParabolicIndex& p, ElementId u, ElementId v);
DeformedClass deformed_multiply(const Workspace& ws, const DeformedClass& a, const DeformedClass& b);

/// Sets every tau_i to `value` (0 or 1) and returns the Schubert-basis class.
CohomClass specialize(const DeformedClass& c, int value);

/// [Lambda-bar_u] (.)_0 [Lambda-bar_v]: the tau-free terms of the deformed product.
CohomClass product0(const Workspace& ws, const ParabolicIndex& p, ElementId u, ElementId v);

/// "2*tau2*b[3] + b[4]" style rendering with user-supplied class names.
std::string to_string(const DeformedClass& c, const std::map<ElementId, std::string>& names);

/// Classical product of Schubert classes by W^P position; result keyed by position.
std::map<int, BigInt> classical_product(const Workspace& ws, const ParabolicIndex& p,
                                        const std::vector<int>& indices);

/// Thrown when a tuple violates sum codim = dim G/P.
class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct LMovability {
  bool movable = false;
  BigInt d;                           // coefficient of [Lambda-bar_e] in the classical product
  std::vector<int> outside;           // alpha_i outside Delta(P)
  std::vector<std::int64_t> defect;   // ((sum chi_{w_j}) - chi_1)(x_i)
};

/// Numerical L-movability criterion. Elements are W^P members labelling
/// Schubert classes [Lambda-bar_w]. Throws DimensionMismatch.
LMovability is_L_movable(const Workspace& ws, const ParabolicIndex& p, const std::vector<ElementId>& tuple);

/// R(T_w) = w^{-1} R^+ cap (R^- \ R^-_l), as negative roots in root coordinates.
std::vector<IntVector> tangent_roots(const WeylGroup& group, const ParabolicIndex& p, ElementId w);

/// R^- \ R^-_l = R(T_w) disjoint-union w_o^P R(T_{w_o w w_o^P}).
bool complement_check(const ParabolicQuotient& quotient, ElementId w);

}  // namespace flagcoh
