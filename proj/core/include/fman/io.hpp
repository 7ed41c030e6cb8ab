#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fman/algebra.hpp"
#include "fman/coord_fman.hpp"

namespace fman {

enum class ReportFormat { json, markdown };

/// Raised by parse_input. Both kinds map to exit code 2.
class InputError : public std::runtime_error {
 public:
  enum class Kind { parse, validation };
  InputError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct InputOptions {
  std::optional<std::uint32_t> degree_bound;
  std::vector<std::size_t> leaf_vars;  // zero-based
  std::optional<ReportFormat> format;

  friend bool operator==(const InputOptions&, const InputOptions&) = default;
};

struct InputSpec {
  enum class Kind { algebra, poly_manifold };

  Kind kind = Kind::algebra;
  std::string name;
  std::string description;
  std::variant<AlgebraStructure, PolyFManifold> payload;
  InputOptions options;

  const AlgebraStructure& algebra() const { return std::get<AlgebraStructure>(payload); }
  const PolyFManifold& manifold() const { return std::get<PolyFManifold>(payload); }

  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

/// Parses and validates a JSON input. Indices in the file are one-based.
/// Bracket entries are completed by antisymmetry and product entries by
/// symmetry; a conflicting pair of entries is a validation error.
InputSpec parse_input(std::string_view bytes);

/// Canonical JSON for an input: upper-triangle entries only, sorted keys.
std::string serialize_input(const InputSpec& spec);

}  // namespace fman
