#pragma once

// Inequality systems cutting out the eigencone: one inequality
// omega_P(sum_j w_j^{-1} h_j) <= 0 per maximal parabolic P and s-tuple of
// W^P whose product has point-class coefficient one.

#include "flagcoh/workspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagcoh {

enum class SystemMode { Classical, Deformed };

const char* to_string(SystemMode m);
SystemMode parse_mode(const std::string& text);

struct Inequality {
  int maximal = 0;  // 0-based simple root outside the Levi
  std::vector<ElementId> tuple;
  /// functional[j][i] = (w_j omega_P)(x_i); the value at (h_1..h_s) is
  /// sum_{j,i} functional[j][i] alpha_i(h_j).
  std::vector<RatVector> functional;
  bool redundant = false;
};

struct InequalitySystem {
  CartanType type;
  int s = 3;
  SystemMode mode = SystemMode::Classical;
  bool pruned = false;
  std::vector<Inequality> inequalities;

  std::size_t redundant_count() const;
  /// Per maximal parabolic (0-based) inequality counts.
  std::map<int, std::size_t> counts_by_parabolic() const;
};

struct EnumerationOptions {
  /// Accept any nonzero point-class coefficient instead of exactly one.
  bool relaxed = false;
  int threads = 1;
  /// Largest number of candidate tuples examined per parabolic.
  std::size_t budget = 20'000'000;
};

/// Ordered tuples in (W^P)^s, positions ascending lexicographically, with
/// sum of codimensions dim G/P and point-class coefficient 1 under the mode's
/// product. Throws InvalidInput for non-maximal p or s < 2.
std::vector<std::vector<ElementId>> enumerate_tuples(const Workspace& ws, const ParabolicIndex& p, int s,
                                                     SystemMode mode, const EnumerationOptions& options = {});

/// Functional of the inequality attached to (P, tuple).
std::vector<RatVector> inequality_functional(const WeylGroup& group, int maximal,
                                             const std::vector<ElementId>& tuple);

/// Union over all standard maximal parabolics. Throws BudgetExceeded.
InequalitySystem generate_system(const Workspace& ws, int s, SystemMode mode,
                                 const EnumerationOptions& options = {});

/// alpha_i(h) for a coweight in simple-coroot coordinates.
RatVector simple_root_values(const RootSystem& rs, const Coweight& h);

struct Verdict {
  bool member = true;
  std::vector<std::pair<std::size_t, Rational>> violated;  // inequality index, value > 0
};

/// Membership of (h_1, ..., h_s). Throws InvalidInput unless every h_j is
/// dominant and the tuple has length s.
Verdict evaluate(const RootSystem& rs, const InequalitySystem& sys, const std::vector<Coweight>& h);

/// Flattened functional, h_1 coordinates first.
RatVector flatten(const Inequality& f);

/// True iff `f` <= 0 holds on every dominant point satisfying all `given`.
bool implied(const std::vector<RatVector>& given, const RatVector& f);
/// A dominant point (flattened alpha_i(h_j) values) satisfying all `given`
/// with f > 0, if one exists.
std::optional<RatVector> violation_witness(const std::vector<RatVector>& given, const RatVector& f);

/// Marks redundant inequalities: in order, an inequality is dropped when the
/// remaining kept ones and dominance imply it. Throws BudgetExceeded when the
/// ambient dimension s * rank exceeds max_dimension.
InequalitySystem prune_redundant(InequalitySystem sys, std::size_t max_dimension = 24);

/// Redundancy with the s * rank chamber walls alpha_i(h_j) >= 0 counted as
/// ordinary members of the system: tuple inequalities first, then the walls,
/// each tested against the kept rest with no side conditions.
struct WallAudit {
  std::size_t walls = 0;
  std::size_t total = 0;  // tuple inequalities plus walls
  std::size_t redundant_inequalities = 0;
  std::size_t redundant_walls = 0;
};
WallAudit audit_with_chamber_walls(const InequalitySystem& sys);

struct EquivalenceReport {
  std::size_t first_not_implied = 0;   // inequalities of a not implied by b
  std::size_t second_not_implied = 0;  // inequalities of b not implied by a
  bool equivalent() const { return first_not_implied == 0 && second_not_implied == 0; }
};

/// Exact comparison of the two polyhedra (with dominance).
EquivalenceReport compare_systems(const InequalitySystem& a, const InequalitySystem& b);

/// Versioned JSON; rationals as "p/q" strings, elements as 1-based reduced words.
std::string to_json(const WeylGroup& group, const InequalitySystem& sys);
/// Throws InvalidInput on schema errors or functionals that do not match
/// their generating tuples.
InequalitySystem system_from_json(const WeylGroup& group, const std::string& text);

}  // namespace flagcoh
