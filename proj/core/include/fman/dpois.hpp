#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "fman/algebra.hpp"
#include "fman/matrix.hpp"
#include "fman/subspace.hpp"

namespace fman {

/// Fiber at the identity of the Poisson-algebra distribution of an F-Lie
/// group: the left-invariant directions u with L(u, ., .) = 0.
struct DpoisFiber {
  Subspace subspace;

  std::size_t rank() const { return subspace.rank(); }
};

/// The n^3 x n matrix of u -> (L(u, e_j, e_k))_{j,k}. Row (j*n + k)*n + m
/// holds the e_m coordinate; column i is the variable u_i.
Matrix stacked_leibnizator(const AlgebraStructure& a);

DpoisFiber dpois_fiber(const AlgebraStructure& a);

struct ClosureVerdict {
  bool bracket_closed = true;
  bool circ_closed = true;
  bool autoparallel = true;
  // Zero-based indices into the fiber basis of the first failing pair.
  std::optional<std::pair<std::size_t, std::size_t>> bracket_witness;
  std::optional<std::pair<std::size_t, std::size_t>> circ_witness;
  std::optional<std::pair<std::size_t, std::size_t>> autoparallel_witness;

  bool all() const { return bracket_closed && circ_closed && autoparallel; }
};

/// For every pair u, v of fiber basis vectors: [u, v], u o v and A_u v lie in
/// the fiber.
ClosureVerdict check_dpois_closures(const AlgebraStructure& a, const DpoisFiber& f);

}  // namespace fman
