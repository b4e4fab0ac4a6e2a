#pragma once

// Finite Weyl groups: enumeration, lengths, inversion sets, minimal coset
// representatives W^P and the involution w -> w_o w w_o^P.

#include "flagcoh/rootsys.hpp"

#include <bitset>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace flagcoh {

using ElementId = std::uint32_t;

/// Subset of the positive roots, indexed as in RootSystem::positive_roots().
using RootSet = std::bitset<128>;

/// Materialized view of one group element.
struct WeylElement {
  ElementId id = 0;
  IntMatrix action;  // action[i][j]: coefficient of alpha_i in w(alpha_j)
  int length = 0;
  std::vector<int> word;  // reduced word, 0-based simple indices
  RootSet inversions;     // Phi_w = w^{-1} R^- \cap R^+
};

class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 2'000'000;

  /// Enumerates the whole group. Throws BudgetExceeded (naming |W|) when
  /// |W| > cap.
  explicit WeylGroup(RootSystem roots, std::size_t cap = kDefaultCap);

  /// |W| from the height distribution of the positive roots.
  static std::uint64_t order(const RootSystem& roots);

  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  std::size_t size() const { return length_.size(); }

  ElementId identity() const { return 0; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }
  ElementId simple_reflection(int i) const { return right_[i][identity()]; }

  int length(ElementId w) const { return length_[w]; }
  const RootSet& inversions(ElementId w) const { return inversions_[w]; }
  std::vector<int> reduced_word(ElementId w) const;
  IntMatrix action(ElementId w) const;
  WeylElement element(ElementId w) const;

  ElementId right_mul(ElementId w, int i) const { return right_[i][w]; }  // w s_i
  ElementId left_mul(int i, ElementId w) const { return left_[i][w]; }    // s_i w
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  /// Throws InvalidInput on an out-of-range letter.
  ElementId from_word(const std::vector<int>& word) const;
  std::optional<ElementId> from_inversion_set(const RootSet& s) const;

  bool is_right_descent(ElementId w, int i) const { return inversions_[w].test(roots_.simple_root_index(i)); }
  bool is_left_descent(ElementId w, int i) const { return is_right_descent(inverse_[w], i); }

  IntVector act(ElementId w, const IntVector& root_coords) const;
  Weight act(ElementId w, const Weight& lambda) const;
  Coweight act(ElementId w, const Coweight& h) const;

  /// Positive roots in Phi_w, in root order.
  std::vector<IntVector> inversion_roots(ElementId w) const;
  /// True iff w maps the positive root with this index to a positive root.
  bool keeps_positive(ElementId w, int root_index) const { return !inversions_[w].test(root_index); }

  /// Longest element of the parabolic subgroup W_P.
  ElementId longest_in(const ParabolicIndex& p) const;
  /// Minimal-length representative of w W_P.
  ElementId min_coset_rep(ElementId w, const ParabolicIndex& p) const;
  bool in_min_reps(ElementId w, const ParabolicIndex& p) const;

 private:
  std::vector<std::int32_t> key_of(const IntMatrix& action) const;

  RootSystem roots_;
  std::vector<std::int32_t> two_rho_;
  std::vector<std::int8_t> actions_;  // |W| * rank * rank, column j = w(alpha_j)
  std::vector<int> length_;
  std::vector<RootSet> inversions_;
  std::vector<std::vector<ElementId>> right_;
  std::vector<std::vector<ElementId>> left_;
  std::vector<ElementId> inverse_;
  struct VecHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept;
  };
  std::unordered_map<std::vector<std::int32_t>, ElementId, VecHash> by_key_;  // key: w(2 rho)
  std::unordered_map<RootSet, ElementId> by_inversions_;
};

/// Element of W^P tagged with its parabolic.
struct CosetRep {
  ElementId element = 0;
  ParabolicIndex parabolic;

  bool operator==(const CosetRep&) const = default;
};

/// W^P in canonical order (by length, then action), with index maps.
class ParabolicQuotient {
 public:
  ParabolicQuotient(const WeylGroup& group, ParabolicIndex p);

  const WeylGroup& group() const { return *group_; }
  const ParabolicIndex& parabolic() const { return parabolic_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  ElementId element(int k) const { return elements_[k]; }
  /// Position in W^P, or -1.
  int index_of(ElementId w) const;
  int length(int k) const { return group_->length(elements_[k]); }
  /// dim G/P = |R^+| - |R^+_l|.
  int dimension() const { return dimension_; }
  int codimension(int k) const { return dimension_ - length(k); }

  ElementId longest_levi() const { return longest_levi_; }  // w_o^P
  int top() const { return static_cast<int>(elements_.size()) - 1; }  // w_o w_o^P
  /// k -> index of w_o w w_o^P.
  int dual(int k) const { return dual_[k]; }
  /// Number of elements of each length 0..dim.
  std::vector<int> degree_profile() const;
  /// Roots of the nilradical u_P (positive roots outside the Levi), as indices.
  const std::vector<int>& nilradical() const { return nilradical_; }

 private:
  const WeylGroup* group_;
  ParabolicIndex parabolic_;
  std::vector<ElementId> elements_;
  std::unordered_map<ElementId, int> position_;
  std::vector<int> dual_;
  std::vector<int> nilradical_;
  ElementId longest_levi_ = 0;
  int dimension_ = 0;
};

/// Convenience wrappers matching the enumeration interface.
std::vector<CosetRep> minimal_reps(const WeylGroup& group, const ParabolicIndex& p);
CosetRep involution(const WeylGroup& group, const CosetRep& w);

/// True iff the positive root with this index lies in the span of Delta(P).
bool in_levi(const RootSystem& rs, int root_index, const ParabolicIndex& p);

}  // namespace flagcoh
