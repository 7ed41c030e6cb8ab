#pragma once

#include <cstddef>
#include <span>

#include "fman/matrix.hpp"
#include "fman/rational.hpp"

namespace fman {

/// Subspace of Q^m held by its reduced row echelon basis. Because the RREF
/// basis is canonical, two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Exact membership test: reduce v against the pivots and check the residual.
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
};

/// {x : m x = 0}.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace fman
