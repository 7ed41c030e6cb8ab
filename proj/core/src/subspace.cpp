#include "fman/subspace.hpp"

#include <stdexcept>
#include <vector>

namespace fman {

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(ambient_dim);
  s.basis_ = rref(Matrix::from_rows(ambient_dim, vectors));
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  s.basis_ = rref(m);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("subspace membership: dimension mismatch");
  Vector residual = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t pivot = 0;
    while (basis_(r, pivot).is_zero()) ++pivot;
    if (residual[pivot].is_zero()) continue;
    const Rational factor = residual[pivot];
    for (std::size_t c = pivot; c < ambient_dim_; ++c) residual[c] -= factor * basis_(r, c);
  }
  return fman::is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("subspace inclusion: ambient dimension mismatch");
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  const Matrix reduced = rref(m);
  const std::size_t cols = m.cols();

  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (reduced(r, c).is_zero()) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }

  std::vector<Vector> generators;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector x(cols);
    x[free] = 1;
    for (std::size_t r = 0; r < reduced.rows(); ++r) x[pivot_of_row[r]] = -reduced(r, free);
    generators.push_back(std::move(x));
  }
  return Subspace::span(cols, generators);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  std::vector<Vector> rows;
  rows.reserve(a.rank() + b.rank());
  for (std::size_t r = 0; r < a.rank(); ++r) rows.push_back(a.basis_vector(r));
  for (std::size_t r = 0; r < b.rank(); ++r) rows.push_back(b.basis_vector(r));
  return Subspace::span(a.ambient_dim(), rows);
}

}  // namespace fman
