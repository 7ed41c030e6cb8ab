#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fman/algebra.hpp"
#include "fman/connection.hpp"
#include "fman/matrix.hpp"
#include "fman/subspace.hpp"

namespace fman {

/// Subspace of End(Q^n), with endomorphisms flattened row-major into Q^{n^2}.
struct EndoSubalgebra {
  std::size_t dim = 0;  // n
  Subspace subspace{0};
  std::vector<std::string> generators_log;
  std::size_t rounds = 0;

  std::size_t rank() const { return subspace.rank(); }
  Matrix element(std::size_t i) const { return Matrix::unflatten(subspace.basis_vector(i), dim); }
  std::vector<Matrix> basis() const;
  bool contains(const Matrix& x) const { return subspace.contains(x.flatten()); }
};

/// The linear span of the given n x n endomorphisms.
EndoSubalgebra endo_span(std::size_t n, std::span<const Matrix> endos);

/// Smallest subspace containing `seeds` that is closed under X -> [A_{e_k}, X]
/// and under commutators. Runs breadth-first rounds until the rank stops
/// growing.
EndoSubalgebra holonomy_closure(const AlgebraStructure& a, std::span<const Matrix> seeds);

/// Holonomy algebra of the canonical connection, seeded by the curvature
/// endomorphisms R(e_i, e_j).
EndoSubalgebra holonomy_algebra(const AlgebraStructure& a, const CurvatureReport& r);

/// ad_[g,g] + A_[g,[g,g]].
EndoSubalgebra poisson_holonomy(const AlgebraStructure& a);

/// ad_[g,g] + A_[g,[g,g]] + L(g,g), where L(g,g) is spanned by the
/// endomorphisms w -> L(e_i, e_j, w).
EndoSubalgebra extended_poisson_holonomy(const AlgebraStructure& a);

/// Derived algebra [g,g] as a subspace of Q^n.
Subspace derived_subspace(const AlgebraStructure& a);
/// [g,[g,g]] as a subspace of Q^n.
Subspace second_derived_subspace(const AlgebraStructure& a);

struct InclusionVerdict {
  bool included = true;
  std::optional<Matrix> witness;  // first basis element of p outside h
};

InclusionVerdict check_inclusion(const EndoSubalgebra& p, const EndoSubalgebra& h);

struct HolonomyDiagnostics {
  std::size_t dim = 0;
  bool abelian = true;
  bool nilpotent_generators = true;  // every basis endomorphism X has X^n = 0
};

HolonomyDiagnostics holonomy_diagnostics(const EndoSubalgebra& h);

struct HolonomySoundness {
  bool contains_curvature = true;
  bool commutator_closed = true;
  bool connection_closed = true;  // closed under [A_{e_k}, .]

  bool all() const { return contains_curvature && commutator_closed && connection_closed; }
};

/// Post-hoc check of the closure conditions on an already computed algebra.
HolonomySoundness verify_holonomy(const AlgebraStructure& a, const CurvatureReport& r,
                                  const EndoSubalgebra& h);

}  // namespace fman
