#include "fman/dpois.hpp"

#include <stdexcept>

#include "fman/connection.hpp"
#include "fman/tensor.hpp"

namespace fman {

Matrix stacked_leibnizator(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  const Tensor3 L = leibnizator(a);
  Matrix m(n * n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t out = 0; out < n; ++out)
        for (std::size_t i = 0; i < n; ++i) m((j * n + k) * n + out, i) = L.at({i, j, k}, out);
  return m;
}

DpoisFiber dpois_fiber(const AlgebraStructure& a) { return {kernel(stacked_leibnizator(a))}; }

ClosureVerdict check_dpois_closures(const AlgebraStructure& a, const DpoisFiber& f) {
  if (f.subspace.ambient_dim() != a.dim())
    throw std::invalid_argument("fiber does not live in the algebra");
  ClosureVerdict v;
  const std::size_t d = f.rank();
  for (std::size_t p = 0; p < d; ++p) {
    const Vector u = f.subspace.basis_vector(p);
    const Matrix Au = a_endo(a, u);
    for (std::size_t q = 0; q < d; ++q) {
      const Vector w = f.subspace.basis_vector(q);
      if (v.bracket_closed && !f.subspace.contains(a.bracket(u, w))) {
        v.bracket_closed = false;
        v.bracket_witness = {p, q};
      }
      if (v.circ_closed && !f.subspace.contains(a.product(u, w))) {
        v.circ_closed = false;
        v.circ_witness = {p, q};
      }
      if (v.autoparallel && !f.subspace.contains(Au.apply(w))) {
        v.autoparallel = false;
        v.autoparallel_witness = {p, q};
      }
    }
  }
  return v;
}

}  // namespace fman
