#include "flagcoh/cache.hpp"

#include <boost/crc.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace flagcoh {

namespace {

using nlohmann::json;

json words(const ParabolicQuotient& q) {
  json out = json::array();
  for (ElementId w : q.elements()) out.push_back(q.group().reduced_word(w));
  return out;
}

std::uint32_t checksum(const std::string& payload) {
  boost::crc_32_type crc;
  crc.process_bytes(payload.data(), payload.size());
  return crc.checksum();
}

}  // namespace

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv("FLAGCOH_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const CartanType& type,
                                 const ParabolicIndex& p) {
  return dir / ("products-" + type.label() + "-" + std::to_string(p.mask()) + ".json");
}

std::optional<ProductTable> load_product_table(const std::filesystem::path& dir, const CartanType& type,
                                               const ParabolicQuotient& quotient) {
  std::ifstream in(cache_file(dir, type, quotient.parabolic()));
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.at("format_version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (doc.at("type").get<std::string>() != type.label()) return std::nullopt;
    if (doc.at("levi_mask").get<std::uint32_t>() != quotient.parabolic().mask()) return std::nullopt;
    if (doc.at("elements") != words(quotient)) return std::nullopt;
    const json& entries = doc.at("entries");
    if (doc.at("checksum").get<std::uint32_t>() != checksum(entries.dump())) return std::nullopt;
    const std::size_t m = quotient.size();
    std::vector<std::vector<Term>> table(m * m);
    for (const auto& e : entries) {
      const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      const auto c = e.at(2).get<int>();
      if (a >= m || b >= m || c < 0 || static_cast<std::size_t>(c) >= m) return std::nullopt;
      table[a * m + b].push_back({c, e.at(3).get<std::int64_t>()});
    }
    return ProductTable(quotient, std::move(table));
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void save_product_table(const std::filesystem::path& dir, const CartanType& type,
                        const ParabolicQuotient& quotient, const ProductTable& table) {
  std::filesystem::create_directories(dir);
  json entries = json::array();
  const std::size_t m = quotient.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (const auto& t : table.product(static_cast<int>(a), static_cast<int>(b)))
        entries.push_back({a, b, t.index, t.coeff});
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["type"] = type.label();
  doc["levi_mask"] = quotient.parabolic().mask();
  doc["elements"] = words(quotient);
  doc["checksum"] = checksum(entries.dump());
  doc["entries"] = std::move(entries);

  const auto target = cache_file(dir, type, quotient.parabolic());
  std::ostringstream suffix;
  suffix << ".tmp." << std::random_device{}();
  const auto tmp = std::filesystem::path(target.string() + suffix.str());
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace flagcoh
