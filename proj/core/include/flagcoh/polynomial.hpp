#pragma once

// Sparse multivariate polynomials over Q in the simple-root variables
// t_1..t_r (t_i = alpha_i), with the W-action and divided differences.

#include "flagcoh/rootsys.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flagcoh {

/// Exponent vector packed 8 bits per variable, variable 0 in the high byte.
using Monomial = std::uint64_t;

class Polynomial {
 public:
  static constexpr int kMaxVariables = 8;
  static constexpr int kMaxExponent = 255;

  explicit Polynomial(int variables = 0);
  static Polynomial constant(int variables, const Rational& c);
  /// t_i.
  static Polynomial variable(int variables, int i);
  /// Linear form sum_i coeffs[i] t_i.
  static Polynomial linear(const IntVector& coeffs);

  int variables() const { return variables_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Constant term.
  Rational constant_term() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const std::vector<int>& exponents) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const = default;

  /// "3/2*t1^2*t2 - t3" with monomials in descending lexicographic order.
  std::string to_string() const;

  static int exponent(Monomial m, int i) { return static_cast<int>((m >> (8 * (kMaxVariables - 1 - i))) & 0xffu); }
  static Monomial pack(const std::vector<int>& exponents);
  static std::vector<int> unpack(Monomial m, int variables);
  static int total_degree(Monomial m);

 /// Adds c times the monomial m.
  void add(Monomial m, const Rational& c);

 private:

  int variables_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// s_i f, where s_i(t_k) = t_k - cartan[i][k] t_i.
Polynomial reflect(const RootSystem& rs, int i, const Polynomial& f);

/// (f - s_i f) / t_i. Throws InternalError if the division is not exact.
Polynomial divided_difference(const RootSystem& rs, int i, const Polynomial& f);

/// Product of all positive roots as linear forms.
Polynomial positive_root_product(const RootSystem& rs);

}  // namespace flagcoh
