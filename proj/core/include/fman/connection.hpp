#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fman/algebra.hpp"
#include "fman/matrix.hpp"
#include "fman/tensor.hpp"

namespace fman {

// Endomorphisms of the algebra are n x n matrices whose column j is the
// image of e_j.

/// v -> [u, v].
Matrix ad(const AlgebraStructure& a, const Vector& u);
/// v -> u o v.
Matrix s_endo(const AlgebraStructure& a, const Vector& u);
/// Connection endomorphism A_u = 1/2 ad_u + S_u, i.e. v -> nabla_u v.
Matrix a_endo(const AlgebraStructure& a, const Vector& u);
/// w -> L(u, v, w), evaluated straight from the Leibnizator formula.
Matrix leibniz_endo(const AlgebraStructure& a, const Vector& u, const Vector& v);

/// T(e_i, e_j) = A_{e_i} e_j - A_{e_j} e_i - [e_i, e_j].
Tensor2 torsion(const AlgebraStructure& a);

/// Curvature endomorphisms R(e_i, e_j) for i < j, in lexicographic pair order.
/// `intrinsic` and `leibniz` are only filled by curvature_split().
struct CurvatureReport {
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Matrix> total;
  std::vector<Matrix> intrinsic;  // -1/4 ad_[e_i, e_j]
  std::vector<Matrix> leibniz;    // 1/2 (L(e_i, e_j, .) - L(e_j, e_i, .))
  bool is_flat = true;

  bool has_split() const { return !intrinsic.empty() || pairs.empty(); }

  /// R(e_i, e_j) for any i, j, using antisymmetry.
  Matrix at(std::size_t i, std::size_t j) const;
  /// R(u, v) by bilinearity.
  Matrix evaluate(const Vector& u, const Vector& v) const;
};

std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(std::size_t n);

/// R(e_i, e_j) = [A_{e_i}, A_{e_j}] - A_{[e_i, e_j]}.
CurvatureReport curvature_commutator(const AlgebraStructure& a);

/// R = R0 + RL with R0(u, v) w = -1/4 [[u, v], w] and
/// RL(u, v) w = 1/2 (L(u, v, w) - L(v, u, w)).
CurvatureReport curvature_split(const AlgebraStructure& a);

/// First basis pair where the two totals differ, if any.
std::optional<std::pair<std::size_t, std::size_t>> curvature_mismatch(const CurvatureReport& lhs,
                                                                      const CurvatureReport& rhs);

}  // namespace fman
