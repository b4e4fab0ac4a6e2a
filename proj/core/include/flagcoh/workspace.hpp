#pragma once

// Lazily built, thread-safe tables for one root system: the Weyl group,
// Schubert polynomials and, per parabolic, W^P, product tables and
// characters.

#include "flagcoh/deform.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace flagcoh {

struct WorkspaceOptions {
  std::size_t weyl_cap = WeylGroup::kDefaultCap;
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
};

class Workspace {
 public:
  explicit Workspace(const CartanType& type, WorkspaceOptions options = {});
  explicit Workspace(RootSystem roots, WorkspaceOptions options = {});
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;
  ~Workspace();

  const RootSystem& roots() const { return group_->roots(); }
  const WeylGroup& group() const { return *group_; }
  const WorkspaceOptions& options() const { return options_; }

  /// Throws InvalidInput if p mentions a simple root beyond the rank.
  void validate(const ParabolicIndex& p) const;

  const SchubertPolynomials& polynomials() const;
  const ParabolicQuotient& quotient(const ParabolicIndex& p) const;
  const ProductTable& table(const ParabolicIndex& p) const;
  const CharacterTable& characters(const ParabolicIndex& p) const;
  const DeformedTable& deformed(const ParabolicIndex& p) const;

  /// Number of product tables loaded from / written to the disk cache.
  int cache_hits() const { return cache_hits_; }

 private:
  struct Slot {
    std::unique_ptr<ParabolicQuotient> quotient;
    std::unique_ptr<ProductTable> table;
    std::unique_ptr<CharacterTable> characters;
    std::unique_ptr<DeformedTable> deformed;
  };
  Slot& slot(const ParabolicIndex& p) const;

  WorkspaceOptions options_;
  std::unique_ptr<WeylGroup> group_;
  mutable std::recursive_mutex mutex_;
  mutable std::unique_ptr<SchubertPolynomials> polys_;
  mutable std::map<std::uint32_t, Slot> slots_;
  mutable int cache_hits_ = 0;
};

}  // namespace flagcoh
