#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fman/rational.hpp"
#include "fman/tensor.hpp"

namespace fman {

/// Which structural invariant an AlgebraStructure breaks.
struct InvariantViolation {
  enum class Kind { bracket_antisymmetry, product_symmetry };
  Kind kind;
  std::array<std::size_t, 3> index;  // (i, j, k), zero-based: c^k_ij or s^k_ij
};

/// A vector space Q^n carrying a bracket [e_i, e_j] = sum_k c^k_ij e_k and a
/// product e_i o e_j = sum_k s^k_ij e_k. Indices are zero-based internally.
class AlgebraStructure {
 public:
  AlgebraStructure() = default;
  AlgebraStructure(std::string name, std::size_t dim);

  /// Builds from raw n^3 grids laid out as (i*n + j)*n + k, without
  /// enforcing antisymmetry or symmetry. Use check_invariants() afterwards.
  static AlgebraStructure from_constants(std::string name, std::size_t dim, Vector bracket,
                                         Vector product);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }

  const Rational& bracket_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_[index(i, j, k)];
  }
  const Rational& product_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return product_[index(i, j, k)];
  }

  /// Sets c^k_ij and c^k_ji = -c^k_ij.
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  /// Sets s^k_ij and s^k_ji.
  void set_product(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

  Vector bracket(std::size_t i, std::size_t j) const;
  Vector product(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& u, const Vector& v) const;
  Vector product(const Vector& u, const Vector& v) const;

  bool bracket_is_zero() const;
  bool product_is_zero() const;

  /// First (lexicographic) antisymmetry or symmetry failure, if any.
  std::optional<InvariantViolation> check_invariants() const;

  friend bool operator==(const AlgebraStructure&, const AlgebraStructure&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }
  Vector bilinear(const Vector& grid, const Vector& u, const Vector& v) const;

  std::string name_;
  std::size_t dim_ = 0;
  Vector bracket_;
  Vector product_;
};

struct AxiomViolation {
  std::vector<std::size_t> indices;  // zero-based basis indices
  Vector residual;
};

struct AxiomVerdict {
  enum class Status { passed, failed, skipped };
  Status status = Status::skipped;
  std::optional<AxiomViolation> witness;

  bool holds() const { return status == Status::passed; }
};

/// Jacobi identity on all basis triples.
AxiomVerdict check_lie_axioms(const AlgebraStructure& a);

/// (e_i o e_j) o e_k = e_i o (e_j o e_k) on all basis triples.
AxiomVerdict check_comm_assoc(const AlgebraStructure& a);

/// Hertling-Manin condition: the HM tensor vanishes on all basis quadruples.
AxiomVerdict check_hm(const AlgebraStructure& a);

struct FmanVerdict {
  std::optional<InvariantViolation> invariants;
  AxiomVerdict lie;
  AxiomVerdict comm_assoc;
  AxiomVerdict hm;

  bool passed() const { return !invariants && lie.holds() && comm_assoc.holds() && hm.holds(); }
};

/// Checks, in order: structural invariants, Jacobi, commutativity and
/// associativity, then Hertling-Manin. HM is skipped unless the first two
/// axioms hold; nothing is evaluated if the invariants fail.
FmanVerdict is_fman(const AlgebraStructure& a);

/// L(e_i, e_j, e_k) = [e_i, e_j o e_k] - [e_i, e_j] o e_k - e_j o [e_i, e_k].
Tensor3 leibnizator(const AlgebraStructure& a);

/// N(x, y, z, w) = L(x o y, z, w) - L(x, z, w) o y - x o L(y, z, w).
Tensor4 hm_tensor(const AlgebraStructure& a);

/// True iff the Leibnizator vanishes identically.
bool is_poisson(const AlgebraStructure& a);

}  // namespace fman
