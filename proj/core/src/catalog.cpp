#include "fman/catalog.hpp"

#include <algorithm>

namespace fman {

const std::vector<CatalogEntry>& catalog() { return detail::embedded_catalog(); }

std::optional<CatalogEntry> find_in_catalog(std::string_view name) {
  std::string file(name);
  if (!file.ends_with(".json")) file += ".json";
  const auto& entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.file == file; });
  if (it == entries.end()) return std::nullopt;
  return *it;
}

}  // namespace fman
