#include "fman/coord_fman.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "fman/subspace.hpp"

namespace fman {

namespace {

void require_nvars(std::size_t expected, const PolyVectorField& x) {
  if (x.size() != expected) throw std::invalid_argument("vector field has wrong variable count");
  for (const auto& c : x.components)
    if (c.nvars() != expected) throw std::invalid_argument("vector field has wrong variable count");
}

}  // namespace

PolyVectorField PolyVectorField::zero(std::size_t nvars) {
  return {std::vector<Polynomial>(nvars, Polynomial(nvars))};
}

PolyVectorField PolyVectorField::coordinate(std::size_t nvars, std::size_t l) {
  PolyVectorField x = zero(nvars);
  x.components.at(l) = Polynomial::constant(nvars, 1);
  return x;
}

PolyVectorField PolyVectorField::constant(std::size_t nvars, const Vector& v) {
  if (v.size() != nvars) throw std::invalid_argument("constant field has wrong length");
  PolyVectorField x = zero(nvars);
  for (std::size_t i = 0; i < nvars; ++i) x.components[i] = Polynomial::constant(nvars, v[i]);
  return x;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

Vector PolyVectorField::evaluate(const Vector& point) const {
  Vector out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.evaluate(point));
  return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector field size mismatch");
  PolyVectorField out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector field size mismatch");
  PolyVectorField out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x) {
  PolyVectorField out = x;
  for (auto& c : out.components) c = f * c;
  return out;
}

PolyTensorField::PolyTensorField(std::size_t nvars)
    : nvars_(nvars), data_(nvars * nvars * nvars, Polynomial(nvars)) {}

bool PolyTensorField::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyFManifold PolyFManifold::from_grid(PolyTensorField grid) {
  PolyFManifold m;
  m.s_ = std::move(grid);
  return m;
}

void PolyFManifold::set_s(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p) {
  const std::size_t n = nvars();
  if (i >= n || j >= n || k >= n) throw std::out_of_range("S index out of range");
  if (p.nvars() != n) throw std::invalid_argument("S component has wrong variable count");
  s_.at(i, j, k) = p;
  s_.at(j, i, k) = p;
}

std::optional<std::array<std::size_t, 3>> PolyFManifold::symmetry_violation() const {
  const std::size_t n = nvars();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (s_.at(i, j, k) != s_.at(j, i, k)) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

PolyTensorField lie_derivative_S(const PolyFManifold& m, const PolyVectorField& x) {
  const std::size_t n = m.nvars();
  require_nvars(n, x);

  // dX[l][q] = d_q X^l
  std::vector<std::vector<Polynomial>> dX(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t q = 0; q < n; ++q) dX[l].push_back(x[l].partial(q));

  PolyTensorField out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Polynomial acc(n);
        for (std::size_t l = 0; l < n; ++l) {
          acc += x[l] * m.s(i, j, k).partial(l);
          acc -= m.s(i, j, l) * dX[k][l];
          acc += m.s(l, j, k) * dX[l][i];
          acc += m.s(i, l, k) * dX[l][j];
        }
        out.at(i, j, k) = std::move(acc);
      }
  return out;
}

PolyVectorField contract(const PolyTensorField& t, const PolyVectorField& y, const PolyVectorField& z) {
  const std::size_t n = t.nvars();
  require_nvars(n, y);
  require_nvars(n, z);
  PolyVectorField out = PolyVectorField::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j].is_zero()) continue;
      const Polynomial yz = y[i] * z[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!t.at(i, j, k).is_zero()) out[k] += t.at(i, j, k) * yz;
    }
  }
  return out;
}

PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  const std::size_t n = x.size();
  require_nvars(n, y);
  PolyVectorField out = PolyVectorField::zero(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      out[k] += x[l] * y[k].partial(l);
      out[k] -= y[l] * x[k].partial(l);
    }
  return out;
}

PolyVectorField field_product(const PolyFManifold& m, const PolyVectorField& x,
                              const PolyVectorField& y) {
  return contract(m.grid(), x, y);
}

PolyVectorField leibnizator_fields(const PolyFManifold& m, const PolyVectorField& x,
                                   const PolyVectorField& y, const PolyVectorField& z) {
  require_nvars(m.nvars(), x);
  return field_bracket(x, field_product(m, y, z)) - field_product(m, field_bracket(x, y), z) -
         field_product(m, y, field_bracket(x, z));
}

HmFieldVerdict hm_tensor_field(const PolyFManifold& m) {
  const std::size_t n = m.nvars();
  std::vector<PolyTensorField> lie_coord;
  for (std::size_t l = 0; l < n; ++l)
    lie_coord.push_back(lie_derivative_S(m, PolyVectorField::coordinate(n, l)));

  HmFieldVerdict verdict;
  for (std::size_t i = 0; i < n; ++i) {
    const PolyVectorField di = PolyVectorField::coordinate(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVectorField dj = PolyVectorField::coordinate(n, j);
      const PolyTensorField lie_ij = lie_derivative_S(m, field_product(m, di, dj));
      for (std::size_t a = 0; a < n; ++a) {
        const PolyVectorField da = PolyVectorField::coordinate(n, a);
        for (std::size_t b = 0; b < n; ++b) {
          const PolyVectorField db = PolyVectorField::coordinate(n, b);
          const PolyVectorField value = contract(lie_ij, da, db) -
                                        field_product(m, contract(lie_coord[i], da, db), dj) -
                                        field_product(m, di, contract(lie_coord[j], da, db));
          for (std::size_t k = 0; k < n; ++k)
            if (!value[k].is_zero()) {
              verdict.zero = false;
              verdict.index = std::array<std::size_t, 5>{i, j, a, b, k};
              verdict.component = value[k];
              return verdict;
            }
        }
      }
    }
  }
  return verdict;
}

PolyVectorField DpoisSystem::field(const Vector& unknown_values) const {
  if (unknown_values.size() != unknowns.size())
    throw std::invalid_argument("unknown vector has wrong length");
  PolyVectorField x = PolyVectorField::zero(nvars);
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    x[unknowns[u].first].add_term(unknowns[u].second, unknown_values[u]);
  return x;
}

Vector DpoisSystem::unknown_values(const PolyVectorField& x) const {
  require_nvars(nvars, x);
  Vector out(unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    out[u] = x[unknowns[u].first].coefficient(unknowns[u].second);
  }
  for (std::size_t r = 0; r < nvars; ++r)
    if (x[r].degree() > degree_bound) throw std::invalid_argument("field exceeds the ansatz degree");
  return out;
}

DpoisSystem assemble_dpois_system(const PolyFManifold& m, std::uint32_t degree_bound) {
  const std::size_t n = m.nvars();
  DpoisSystem sys;
  sys.nvars = n;
  sys.degree_bound = degree_bound;
  const std::vector<Exponents> monos = monomials_up_to(n, degree_bound);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& mu : monos) sys.unknowns.emplace_back(r, mu);

  // Column polynomials for each (i <= j, k): the coefficient of unknown
  // (r, mu) is the left-hand side with X^r = x^mu and all other X^s = 0.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Polynomial> columns;
        columns.reserve(sys.unknowns.size());
        std::set<Exponents, GradedLex> support;
        for (const auto& [r, mu] : sys.unknowns) {
          const Polynomial xr = Polynomial::monomial(n, mu, 1);
          Polynomial col = m.s(i, j, k).partial(r) * xr;
          for (std::size_t q = 0; q < n; ++q) {
            const Polynomial dq = xr.partial(q);
            if (dq.is_zero()) continue;
            if (k == r) col -= m.s(i, j, q) * dq;
            if (q == i) col += m.s(r, j, k) * dq;
            if (q == j) col += m.s(i, r, k) * dq;
          }
          for (const auto& term : col.terms()) support.insert(term.first);
          columns.push_back(std::move(col));
        }
        for (const auto& mono : support) {
          std::vector<Rational> row;
          row.reserve(columns.size());
          for (const auto& col : columns) row.push_back(col.coefficient(mono));
          rows.push_back(std::move(row));
          sys.equations.emplace_back(i, j, k, mono);
        }
      }

  sys.coefficients = Matrix(rows.size(), sys.unknowns.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < sys.unknowns.size(); ++c) sys.coefficients(r, c) = rows[r][c];
  return sys;
}

std::size_t AnsatzSolution::rank_at(const Vector& point) const {
  if (basis.empty()) return 0;
  std::vector<Vector> values;
  for (const auto& x : basis) values.push_back(x.evaluate(point));
  return Subspace::span(point.size(), values).rank();
}

AnsatzSolution solve_dpois_ansatz(const PolyFManifold& m, std::uint32_t degree_bound) {
  const DpoisSystem sys = assemble_dpois_system(m, degree_bound);
  const Subspace solutions = kernel(sys.coefficients);
  AnsatzSolution out;
  out.degree_bound = degree_bound;
  for (std::size_t b = 0; b < solutions.rank(); ++b)
    out.basis.push_back(sys.field(solutions.basis_vector(b)));
  return out;
}

SplittingVerdict splitting_check(const PolyFManifold& m, std::span<const std::size_t> leaf_vars) {
  const std::size_t n = m.nvars();
  SplittingVerdict v;
  for (std::size_t l : leaf_vars) {
    if (l >= n) throw std::out_of_range("leaf variable out of range");
    const PolyTensorField lie = lie_derivative_S(m, PolyVectorField::coordinate(n, l));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (v.leaf_derivatives_zero && !m.s(i, j, k).partial(l).is_zero()) {
            v.leaf_derivatives_zero = false;
            v.derivative_witness = std::array<std::size_t, 4>{l, i, j, k};
          }
          if (v.leaf_fields_kill_S && !lie.at(i, j, k).is_zero()) {
            v.leaf_fields_kill_S = false;
            v.lie_witness = std::array<std::size_t, 4>{l, i, j, k};
          }
        }
  }
  return v;
}

}  // namespace fman
