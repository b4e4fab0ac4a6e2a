#include "flagcoh/workspace.hpp"

#include "flagcoh/cache.hpp"

namespace flagcoh {

Workspace::Workspace(const CartanType& type, WorkspaceOptions options)
    : Workspace(RootSystem::build(type), std::move(options)) {}

Workspace::Workspace(RootSystem roots, WorkspaceOptions options)
    : options_(std::move(options)), group_(std::make_unique<WeylGroup>(std::move(roots), options_.weyl_cap)) {}

Workspace::~Workspace() = default;

void Workspace::validate(const ParabolicIndex& p) const {
  if (roots().rank() < 32 && (p.mask() >> roots().rank()) != 0)
    throw InvalidInput("parabolic " + p.label(32) + " mentions simple roots beyond rank " +
                       std::to_string(roots().rank()));
}

const SchubertPolynomials& Workspace::polynomials() const {
  std::lock_guard lock(mutex_);
  if (!polys_) polys_ = std::make_unique<SchubertPolynomials>(*group_);
  return *polys_;
}

Workspace::Slot& Workspace::slot(const ParabolicIndex& p) const {
  validate(p);
  Slot& s = slots_[p.mask()];
  if (!s.quotient) s.quotient = std::make_unique<ParabolicQuotient>(*group_, p);
  return s;
}

const ParabolicQuotient& Workspace::quotient(const ParabolicIndex& p) const {
  std::lock_guard lock(mutex_);
  return *slot(p).quotient;
}

const ProductTable& Workspace::table(const ParabolicIndex& p) const {
  std::lock_guard lock(mutex_);
  Slot& s = slot(p);
  if (s.table) return *s.table;
  const auto& type = roots().type();
  if (options_.cache_dir && type) {
    if (auto cached = load_product_table(*options_.cache_dir, *type, *s.quotient)) {
      s.table = std::make_unique<ProductTable>(std::move(*cached));
      ++cache_hits_;
      return *s.table;
    }
  }
  s.table = std::make_unique<ProductTable>(ProductTable::compute(*s.quotient, polynomials(), options_.threads));
  if (options_.cache_dir && type) save_product_table(*options_.cache_dir, *type, *s.quotient, *s.table);
  return *s.table;
}

const CharacterTable& Workspace::characters(const ParabolicIndex& p) const {
  std::lock_guard lock(mutex_);
  Slot& s = slot(p);
  if (!s.characters) s.characters = std::make_unique<CharacterTable>(*s.quotient);
  return *s.characters;
}

const DeformedTable& Workspace::deformed(const ParabolicIndex& p) const {
  std::lock_guard lock(mutex_);
  Slot& s = slot(p);
  if (!s.deformed) s.deformed = std::make_unique<DeformedTable>(*s.quotient, table(p), characters(p));
  return *s.deformed;
}

}  // namespace flagcoh
