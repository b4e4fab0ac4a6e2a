#pragma once

// Necessary conditions for nonvanishing of Schubert products: character
// inequalities (with their Levi recursion), the central-character refinement
// for L-movable tuples, and dimension inequalities for induced tuples.

#include "flagcoh/workspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace flagcoh {

/// Nil-radical roots sharing their coefficients on Delta \ Delta(P).
struct CentralChar {
  std::vector<std::int64_t> signature;  // one entry per alpha_i outside Delta(P), in order
  std::vector<int> roots;               // positive-root indices in the class
};

/// Classes of R(u_P) by signature, in lexicographic signature order.
std::vector<CentralChar> central_characters(const RootSystem& rs, const ParabolicIndex& p);

/// chi_w^c: sum of the roots of c lying in w^{-1} R^+, root coordinates.
IntVector chi_central(const WeylGroup& group, const CentralChar& c, ElementId w);
/// |R(w, c)|.
int central_count(const WeylGroup& group, const CentralChar& c, ElementId w);

enum class CheckKind { Center, CenterPrime, T2PrimeEquality, T2PrimeRefined, Dimension };
enum class Relation { LessEqual, Equal, GreaterEqual };

const char* to_string(CheckKind k);
const char* to_string(Relation r);

struct HornCheck {
  CheckKind kind = CheckKind::Center;
  Relation relation = Relation::LessEqual;
  Rational lhs;
  Rational rhs;
  bool passed = false;
  std::string datum;  // generating data: Q_L, u-tuple, p, c, or (Q, Q-hat)

  /// Recomputes the verdict from lhs, rhs and relation.
  bool evaluate() const;
};

struct HornReport {
  std::vector<ElementId> tuple;
  ParabolicIndex parabolic;
  bool applicable = true;
  std::string note;
  BigInt d;  // coefficient of the point class in the classical product
  std::vector<HornCheck> checks;

  std::size_t violations() const;
  bool passed() const { return violations() == 0; }
};

/// Levi data reused across checks on one parabolic: for every standard
/// parabolic Q_L of L, the s-tuples of W_L^{Q_L} with nonzero product in
/// H^*(L/Q_L), as ambient Weyl elements.
struct LeviTuples {
  ParabolicIndex q;  // Delta(Q_L), ambient indices
  std::vector<std::vector<ElementId>> tuples;
};

class HornEngine {
 public:
  explicit HornEngine(const Workspace& ws);
  ~HornEngine();

  const Workspace& workspace() const { return *ws_; }

  /// Character inequalities. Throws DimensionMismatch unless sum codim = dim G/P.
  /// A tuple with vanishing classical product yields applicable = false.
  HornReport check_T2(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const;

  /// Central-character refinement. Throws InvalidInput for tuples that are not L-movable.
  HornReport check_T2prime(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const;

  /// Dimension inequalities for w_hat_j = w_j u_j. Throws InvalidInput unless
  /// both precondition products are nonzero and Q is inside P and Q-hat.
  HornReport check_dimension(const ParabolicIndex& p, const std::vector<ElementId>& tuple, const ParabolicIndex& q,
                             const ParabolicIndex& qhat, const std::vector<ElementId>& utuple) const;

  /// T2 inequalities evaluated without the nonvanishing precondition.
  std::vector<HornCheck> character_inequalities(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const;

  /// Levi tuples for the maximal parabolics of L (or all parabolics when
  /// maximal_only is false), memoized per (P, s).
  const std::vector<LeviTuples>& levi_tuples(const ParabolicIndex& p, int s, bool maximal_only = true) const;

  /// Nonzero product of [Lambda-bar^{Q_L}_{u_j}] in H^*(L/Q_L), u_j ambient elements of W_L.
  bool levi_product_nonzero(const ParabolicIndex& p, const ParabolicIndex& q, const std::vector<ElementId>& utuple) const;

  /// Nonzero classical product of [Lambda-bar^P_{w_j}] (any degree).
  bool product_nonzero(const ParabolicIndex& p, const std::vector<ElementId>& tuple) const;

  /// |R(u_P) cap w^{-1} R^+| for any w in W.
  int codim_by_roots(const ParabolicIndex& p, ElementId w) const;

 private:
  struct Levi;
  const Levi& levi(const ParabolicIndex& p) const;

  const Workspace* ws_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<Levi>> levis_;
  mutable std::map<std::tuple<std::uint32_t, int, bool>, std::vector<LeviTuples>> levi_tuples_;
};

struct ConverseCandidate {
  std::vector<ElementId> tuple;
  ParabolicIndex parabolic;
};

struct ConverseReport {
  std::size_t tuples_examined = 0;
  std::size_t zero_products = 0;
  std::size_t zero_but_passing = 0;  // counterexamples to the converse
  std::vector<ConverseCandidate> examples;
};

/// Searches s-tuples with sum codim = dim G/P and zero product that satisfy
/// every character inequality. Results are evidence only.
ConverseReport horn_converse_experiment(const HornEngine& engine, const ParabolicIndex& p, int s,
                                        std::size_t max_examples = 20);

/// Nondecreasing s-tuples of W^P positions with the given codimension sum.
std::vector<std::vector<int>> codim_tuples(const ParabolicQuotient& q, int s, int codim_sum);

}  // namespace flagcoh
