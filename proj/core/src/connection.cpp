#include "fman/connection.hpp"

#include <stdexcept>

namespace fman {

namespace {

void require_length(const AlgebraStructure& a, const Vector& u) {
  if (u.size() != a.dim()) throw std::invalid_argument("endomorphism argument has wrong length");
}

template <typename F>
Matrix columns_from(std::size_t n, F&& image_of) {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = image_of(unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

}  // namespace

Matrix ad(const AlgebraStructure& a, const Vector& u) {
  require_length(a, u);
  return columns_from(a.dim(), [&](const Vector& v) { return a.bracket(u, v); });
}

Matrix s_endo(const AlgebraStructure& a, const Vector& u) {
  require_length(a, u);
  return columns_from(a.dim(), [&](const Vector& v) { return a.product(u, v); });
}

Matrix a_endo(const AlgebraStructure& a, const Vector& u) {
  return Rational(1, 2) * ad(a, u) + s_endo(a, u);
}

Matrix leibniz_endo(const AlgebraStructure& a, const Vector& u, const Vector& v) {
  require_length(a, u);
  require_length(a, v);
  return columns_from(a.dim(), [&](const Vector& w) {
    return a.bracket(u, a.product(v, w)) - a.product(a.bracket(u, v), w) -
           a.product(v, a.bracket(u, w));
  });
}

Tensor2 torsion(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  Tensor2 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix Ai = a_endo(a, unit_vector(n, i));
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix Aj = a_endo(a, unit_vector(n, j));
      t.set_value({i, j}, Ai.column(j) - Aj.column(i) - a.bracket(i, j));
    }
  }
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

Matrix CurvatureReport::at(std::size_t i, std::size_t j) const {
  if (i >= dim || j >= dim) throw std::out_of_range("curvature index out of range");
  if (i == j) return Matrix(dim, dim);
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  // Lexicographic position of (i, j) among pairs with i < j.
  const std::size_t pos = i * dim - i * (i + 1) / 2 + (j - i - 1);
  return swapped ? -total.at(pos) : total.at(pos);
}

Matrix CurvatureReport::evaluate(const Vector& u, const Vector& v) const {
  if (u.size() != dim || v.size() != dim) throw std::invalid_argument("curvature argument length");
  Matrix out(dim, dim);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const Rational coeff = u[i] * v[j] - u[j] * v[i];
    if (!coeff.is_zero()) out += coeff * total[p];
  }
  return out;
}

CurvatureReport curvature_commutator(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  CurvatureReport r;
  r.dim = n;
  r.pairs = basis_pairs(n);
  std::vector<Matrix> A;
  A.reserve(n);
  for (std::size_t i = 0; i < n; ++i) A.push_back(a_endo(a, unit_vector(n, i)));
  for (const auto& [i, j] : r.pairs) {
    Matrix R = commutator(A[i], A[j]) - a_endo(a, a.bracket(i, j));
    r.is_flat = r.is_flat && R.is_zero();
    r.total.push_back(std::move(R));
  }
  return r;
}

CurvatureReport curvature_split(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  const Tensor3 L = leibnizator(a);
  CurvatureReport r;
  r.dim = n;
  r.pairs = basis_pairs(n);
  for (const auto& [i, j] : r.pairs) {
    Matrix r0 = Rational(-1, 4) * ad(a, a.bracket(i, j));
    Matrix rl(n, n);
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t m = 0; m < n; ++m)
        rl(m, w) = Rational(1, 2) * (L.at({i, j, w}, m) - L.at({j, i, w}, m));
    Matrix total = r0 + rl;
    r.is_flat = r.is_flat && total.is_zero();
    r.intrinsic.push_back(std::move(r0));
    r.leibniz.push_back(std::move(rl));
    r.total.push_back(std::move(total));
  }
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> curvature_mismatch(const CurvatureReport& lhs,
                                                                      const CurvatureReport& rhs) {
  if (lhs.dim != rhs.dim) throw std::invalid_argument("curvature reports of different dimension");
  for (std::size_t p = 0; p < lhs.pairs.size(); ++p)
    if (lhs.total[p] != rhs.total[p]) return lhs.pairs[p];
  return std::nullopt;
}

}  // namespace fman
