#pragma once

// Reference deformed-product tables for rank-3 maximal parabolics and their
// verification up to a codimension-preserving relabelling.

#include "flagcoh/workspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace flagcoh {

struct GoldenTerm {
  std::int64_t coeff = 1;
  int tau = 0;
  std::string label;
};

struct GoldenEntry {
  std::string row;
  std::string column;
  std::vector<GoldenTerm> terms;  // empty means 0
  int line = 0;
};

struct GoldenTable {
  std::string name;
  CartanType type;
  int maximal = 1;  // 1-based index of the simple root outside the Levi
  std::vector<std::pair<std::string, int>> classes;  // label, codimension
  std::vector<GoldenEntry> entries;

  ParabolicIndex parabolic() const { return ParabolicIndex::maximal(type.rank, maximal - 1); }
};

/// Throws InvalidInput with the line number on malformed input.
GoldenTable parse_golden(const std::string& text, const std::string& name);

/// The four bundled tables: b3_p2, b3_p3, c3_p1, c3_p2.
std::vector<GoldenTable> bundled_golden_tables();

struct GoldenReport {
  std::string name;
  bool passed = false;
  std::size_t bijections_tried = 0;
  std::size_t bijections_matching = 0;
  std::size_t entries = 0;
  /// Label -> W^P element of a matching bijection, or of the closest one.
  std::map<std::string, ElementId> bijection;
  /// Mismatched entries under the reported bijection.
  std::vector<std::string> diffs;
};

GoldenReport verify_golden(const Workspace& ws, const GoldenTable& table);

}  // namespace flagcoh
