#pragma once

// Exact-rational linear feasibility by the dictionary simplex method with
// Bland's rule.

#include "flagcoh/numeric.hpp"

#include <optional>

namespace flagcoh {

/// A point x >= 0 with A x <= b, or nullopt if none exists.
std::optional<RatVector> find_feasible_point(const RatMatrix& a, const RatVector& b);

}  // namespace flagcoh
