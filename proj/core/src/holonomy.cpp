#include "fman/holonomy.hpp"

#include <stdexcept>

namespace fman {

std::vector<Matrix> EndoSubalgebra::basis() const {
  std::vector<Matrix> out;
  out.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(element(i));
  return out;
}

EndoSubalgebra endo_span(std::size_t n, std::span<const Matrix> endos) {
  std::vector<Vector> flat;
  flat.reserve(endos.size());
  for (const auto& e : endos) {
    if (e.rows() != n || e.cols() != n) throw std::invalid_argument("endomorphism has wrong shape");
    flat.push_back(e.flatten());
  }
  EndoSubalgebra out;
  out.dim = n;
  out.subspace = Subspace::span(n * n, flat);
  return out;
}

EndoSubalgebra holonomy_closure(const AlgebraStructure& a, std::span<const Matrix> seeds) {
  const std::size_t n = a.dim();
  EndoSubalgebra h = endo_span(n, seeds);
  if (h.subspace.is_zero()) return h;

  std::vector<Matrix> A;
  for (std::size_t k = 0; k < n; ++k) A.push_back(a_endo(a, unit_vector(n, k)));

  while (true) {
    ++h.rounds;
    const std::vector<Matrix> current = h.basis();
    std::vector<Vector> candidates;
    for (const auto& x : current) candidates.push_back(x.flatten());
    for (const auto& x : current)
      for (const auto& Ak : A) {
        Matrix c = commutator(Ak, x);
        if (!c.is_zero()) candidates.push_back(c.flatten());
      }
    for (std::size_t p = 0; p < current.size(); ++p)
      for (std::size_t q = p + 1; q < current.size(); ++q) {
        Matrix c = commutator(current[p], current[q]);
        if (!c.is_zero()) candidates.push_back(c.flatten());
      }

    const std::size_t before = h.rank();
    h.subspace = Subspace::span(n * n, candidates);
    h.generators_log.push_back("round " + std::to_string(h.rounds) + ": rank " +
                               std::to_string(before) + " -> " + std::to_string(h.rank()));
    if (h.rank() == before) break;
  }
  return h;
}

EndoSubalgebra holonomy_algebra(const AlgebraStructure& a, const CurvatureReport& r) {
  if (r.dim != a.dim()) throw std::invalid_argument("curvature report does not match algebra");
  std::vector<Matrix> seeds;
  std::vector<std::string> log;
  for (std::size_t p = 0; p < r.pairs.size(); ++p) {
    if (r.total[p].is_zero()) continue;
    seeds.push_back(r.total[p]);
    log.push_back("curvature R(e" + std::to_string(r.pairs[p].first + 1) + ", e" +
                  std::to_string(r.pairs[p].second + 1) + ")");
  }
  EndoSubalgebra h = holonomy_closure(a, seeds);
  log.insert(log.end(), h.generators_log.begin(), h.generators_log.end());
  h.generators_log = std::move(log);
  return h;
}

Subspace derived_subspace(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(a.bracket(i, j));
  return Subspace::span(n, gens);
}

Subspace second_derived_subspace(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  const Subspace gg = derived_subspace(a);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < gg.rank(); ++b)
      gens.push_back(a.bracket(unit_vector(n, i), gg.basis_vector(b)));
  return Subspace::span(n, gens);
}

EndoSubalgebra poisson_holonomy(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> gens;
  std::vector<std::string> log;
  const Subspace gg = derived_subspace(a);
  for (std::size_t b = 0; b < gg.rank(); ++b) {
    gens.push_back(ad(a, gg.basis_vector(b)));
    log.push_back("ad of [g,g] basis vector " + to_string(gg.basis_vector(b)));
  }
  const Subspace ggg = second_derived_subspace(a);
  for (std::size_t b = 0; b < ggg.rank(); ++b) {
    gens.push_back(a_endo(a, ggg.basis_vector(b)));
    log.push_back("A of [g,[g,g]] basis vector " + to_string(ggg.basis_vector(b)));
  }
  EndoSubalgebra out = endo_span(n, gens);
  out.generators_log = std::move(log);
  return out;
}

EndoSubalgebra extended_poisson_holonomy(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  EndoSubalgebra base = poisson_holonomy(a);
  std::vector<Matrix> gens = base.basis();
  std::vector<std::string> log = base.generators_log;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = leibniz_endo(a, unit_vector(n, i), unit_vector(n, j));
      if (l.is_zero()) continue;
      log.push_back("L(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
      gens.push_back(std::move(l));
    }
  EndoSubalgebra out = endo_span(n, gens);
  out.generators_log = std::move(log);
  return out;
}

InclusionVerdict check_inclusion(const EndoSubalgebra& p, const EndoSubalgebra& h) {
  if (p.dim != h.dim) throw std::invalid_argument("inclusion check: ambient mismatch");
  for (std::size_t i = 0; i < p.rank(); ++i)
    if (!h.subspace.contains(p.subspace.basis_vector(i))) return {false, p.element(i)};
  return {true, std::nullopt};
}

HolonomyDiagnostics holonomy_diagnostics(const EndoSubalgebra& h) {
  HolonomyDiagnostics d;
  d.dim = h.rank();
  const std::vector<Matrix> basis = h.basis();
  for (std::size_t p = 0; p < basis.size() && d.abelian; ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      if (!commutator(basis[p], basis[q]).is_zero()) {
        d.abelian = false;
        break;
      }
  for (const auto& x : basis) {
    Matrix power = Matrix::identity(h.dim);
    for (std::size_t k = 0; k < h.dim; ++k) power = power * x;
    if (!power.is_zero()) {
      d.nilpotent_generators = false;
      break;
    }
  }
  return d;
}

HolonomySoundness verify_holonomy(const AlgebraStructure& a, const CurvatureReport& r,
                                  const EndoSubalgebra& h) {
  const std::size_t n = a.dim();
  HolonomySoundness s;
  for (const auto& R : r.total)
    if (!h.contains(R)) s.contains_curvature = false;
  const std::vector<Matrix> basis = h.basis();
  for (std::size_t p = 0; p < basis.size(); ++p) {
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      if (!h.contains(commutator(basis[p], basis[q]))) s.commutator_closed = false;
    for (std::size_t k = 0; k < n; ++k)
      if (!h.contains(commutator(a_endo(a, unit_vector(n, k)), basis[p])))
        s.connection_closed = false;
  }
  return s;
}

}  // namespace fman
