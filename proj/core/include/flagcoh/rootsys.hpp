#pragma once

// Root systems of finite type with exact weight/coweight arithmetic.
//
// Conventions:
//   * simple roots are indexed 0..rank-1 internally (Bourbaki order);
//     user-facing text uses 1-based indices;
//   * cartan()[i][j] = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan()[i][j] alpha_i;
//   * the invariant form is scaled so that short roots have squared length 2.

#include "flagcoh/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagcoh {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidInput unless the rank is admissible for the family
  /// (A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2).
  void validate() const;
  std::string label() const;  // e.g. "B3"
  static CartanType parse(const std::string& family, int rank);
  static CartanType parse(const std::string& label);  // "B3"

  auto operator<=>(const CartanType&) const = default;
};

char family_letter(Family f);

/// Delta(P): the simple roots inside the Levi factor, as a bit mask.
class ParabolicIndex {
 public:
  ParabolicIndex() = default;  // Delta(P) = {} (the Borel)
  explicit ParabolicIndex(std::uint32_t mask) : mask_(mask) {}

  static ParabolicIndex borel() { return ParabolicIndex(0); }
  static ParabolicIndex whole(int rank) { return ParabolicIndex((1u << rank) - 1); }
  /// The standard maximal parabolic with alpha_removed outside the Levi.
  static ParabolicIndex maximal(int rank, int removed);
  static ParabolicIndex from_levi(int rank, const std::vector<int>& levi_simples);

  bool contains(int i) const { return (mask_ >> i) & 1u; }
  std::uint32_t mask() const { return mask_; }
  std::vector<int> levi_simples(int rank) const;
  /// Delta \ Delta(P).
  std::vector<int> outside(int rank) const;
  bool is_maximal(int rank) const { return outside(rank).size() == 1; }
  bool subset_of(const ParabolicIndex& o) const { return (mask_ & ~o.mask_) == 0; }
  ParabolicIndex intersect(const ParabolicIndex& o) const { return ParabolicIndex(mask_ & o.mask_); }
  /// "{1,3}" in 1-based indices.
  std::string label(int rank) const;

  auto operator<=>(const ParabolicIndex&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

enum class WeightBasis { SimpleRoot, FundamentalWeight };

/// Element of h^*, with its coordinate basis recorded.
struct Weight {
  RatVector coords;
  WeightBasis basis = WeightBasis::SimpleRoot;

  bool operator==(const Weight&) const = default;
};

/// Element of h in the simple-coroot basis.
struct Coweight {
  RatVector coords;

  bool operator==(const Coweight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& c, const Weight& a);
Coweight operator+(const Coweight& a, const Coweight& b);
Coweight operator-(const Coweight& a, const Coweight& b);
Coweight operator*(const Rational& c, const Coweight& a);

struct LeviSubsystem;

class RootSystem {
 public:
  static RootSystem build(const CartanType& type);
  /// Any positive-definite symmetric Gram matrix of a (possibly reducible)
  /// base; (alpha_i, alpha_i) must be positive and 2(a_i,a_j)/(a_i,a_i) integral.
  static RootSystem from_gram(const IntMatrix& gram, std::string label);

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::string& label() const { return label_; }
  const std::optional<CartanType>& type() const { return type_; }
  const IntMatrix& gram() const { return gram_; }
  const IntMatrix& cartan() const { return cartan_; }

  /// Positive roots in simple-root coordinates, ordered by height then
  /// reverse-lexicographically (so alpha_1, ..., alpha_r come first).
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }
  /// Index of a positive root, or -1.
  int positive_root_index(const IntVector& root) const;
  /// True if root (in either sign) is a root.
  bool is_root(const IntVector& v) const;
  int simple_root_index(int i) const { return simple_pos_[i]; }
  const IntVector& highest_root() const { return positive_.back(); }

  std::int64_t inner(const IntVector& a, const IntVector& b) const;
  Rational inner(const Weight& a, const Weight& b) const;

  /// s_i applied to a vector in simple-root coordinates.
  IntVector reflect(int i, const IntVector& v) const;
  RatVector reflect(int i, const RatVector& v) const;
  /// s_i applied to a coweight (simple-coroot coordinates).
  Coweight reflect(int i, const Coweight& h) const;

  Weight rho() const;
  /// Half-sum of the positive roots of the Levi with simple roots levi.
  Weight rho(const ParabolicIndex& levi) const;
  Weight fundamental_weight(int i) const;  // root basis
  Coweight fundamental_coweight(int i) const;
  Coweight simple_coroot(int i) const;
  Weight simple_root(int i) const;
  Weight root(const IntVector& v) const;

  Weight to_root_basis(const Weight& w) const;
  Weight to_weight_basis(const Weight& w) const;

  Rational pair(const Weight& w, const Coweight& h) const;
  /// Form-induced identification h -> h^* (alpha^vee -> 2 alpha/(alpha,alpha)).
  Weight coweight_to_weight(const Coweight& h) const;
  Coweight weight_to_coweight(const Weight& w) const;

  LeviSubsystem levi_subsystem(const ParabolicIndex& p) const;

  /// Coefficient of alpha_i in the highest root of the component containing i.
  std::int64_t highest_root_coefficient(int i) const;
  bool is_minuscule(int i) const { return highest_root_coefficient(i) == 1; }

  bool operator==(const RootSystem& o) const { return gram_ == o.gram_; }

 private:
  std::string label_;
  std::optional<CartanType> type_;
  IntMatrix gram_;
  IntMatrix cartan_;
  RatMatrix cartan_inverse_;
  std::vector<IntVector> positive_;
  std::map<IntVector, int> index_;
  std::vector<int> simple_pos_;
};

/// Root system of the semisimple part of a Levi, with maps back into the
/// ambient system.
struct LeviSubsystem {
  RootSystem system;
  std::vector<int> simple_map;  // subsystem simple index -> ambient simple index
  std::vector<int> root_map;    // subsystem positive root -> ambient positive root

  /// Lift a vector in subsystem simple-root coordinates.
  IntVector lift(const IntVector& sub, int ambient_rank) const;
};

IntMatrix gram_matrix(const CartanType& type);

}  // namespace flagcoh
