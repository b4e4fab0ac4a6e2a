#pragma once

// Inversion-set description of (H^*(G/B), (.)_0) and the Kostant data of W^P.

#include "flagcoh/workspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flagcoh {

bool is_closed(const RootSystem& rs, const RootSet& s);
/// R^+ \ s is closed.
bool is_coclosed(const RootSystem& rs, const RootSet& s);

/// The unique w with Phi_w = s when s is closed and coclosed.
std::optional<ElementId> is_inversion_set(const WeylGroup& group, const RootSet& s);

/// epsilon_u (.)_0 epsilon_v on G/B by the Phi-set rule, dual basis.
CohomClass leviprod0(const WeylGroup& group, ElementId u, ElementId v);

/// epsilon_{s_i} (.)_0 epsilon_v: epsilon_{v s_i} if v alpha_i is simple, else 0.
CohomClass chevalley0(const WeylGroup& group, int i, ElementId v);

/// Elements that are products of pairwise commuting distinct simple reflections.
std::vector<ElementId> commuting_products(const WeylGroup& group);

struct KostantModule {
  ElementId w = 0;
  int degree = 0;
  Weight highest_weight;  // w^{-1} rho - rho, root basis
};

/// One module per w in W^P of the given length.
std::vector<KostantModule> kostant_decomposition(const ParabolicQuotient& quotient, int degree);

/// <lambda, alpha_i^vee> >= 0 for every alpha_i in Delta(P).
bool is_levi_dominant(const RootSystem& rs, const ParabolicIndex& p, const Weight& lambda);

struct CrosscheckReport {
  std::string label;
  std::size_t pairs = 0;
  std::size_t agreeing = 0;
  std::optional<std::pair<ElementId, ElementId>> first_mismatch;
  std::string detail;

  bool passed() const { return pairs == agreeing; }
};

/// Compares the deformed (.)_0 on G/B with leviprod0 for all pairs.
CrosscheckReport crosscheck_gb(const Workspace& ws);

}  // namespace flagcoh
