#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fman {

struct CatalogEntry {
  std::string file;  // e.g. "n31_2_D1.json"
  std::string json;
};

/// Bundled example inputs, sorted by file name.
const std::vector<CatalogEntry>& catalog();

/// Looks up a bundled input by file name, with or without the ".json" suffix.
std::optional<CatalogEntry> find_in_catalog(std::string_view name);

namespace detail {
const std::vector<CatalogEntry>& embedded_catalog();
}

}  // namespace fman
