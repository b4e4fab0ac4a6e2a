#pragma once

// On-disk cache of product tables. Files are self-describing JSON with a
// format version, the (type, Levi) key, the W^P elements as reduced words and
// a CRC-32 of the payload. A file that fails any check is ignored.

#include "flagcoh/schubert.hpp"

#include <filesystem>
#include <optional>

namespace flagcoh {

inline constexpr int kCacheFormatVersion = 1;

/// Directory from FLAGCOH_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_dir_from_env();

std::filesystem::path cache_file(const std::filesystem::path& dir, const CartanType& type,
                                 const ParabolicIndex& p);

std::optional<ProductTable> load_product_table(const std::filesystem::path& dir, const CartanType& type,
                                               const ParabolicQuotient& quotient);

/// Writes through a temporary file and an atomic rename.
void save_product_table(const std::filesystem::path& dir, const CartanType& type,
                        const ParabolicQuotient& quotient, const ProductTable& table);

}  // namespace flagcoh
