#include "fman/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace fman {

AlgebraStructure::AlgebraStructure(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), bracket_(dim * dim * dim), product_(dim * dim * dim) {}

AlgebraStructure AlgebraStructure::from_constants(std::string name, std::size_t dim,
                                                  Vector bracket, Vector product) {
  if (bracket.size() != dim * dim * dim || product.size() != dim * dim * dim)
    throw std::invalid_argument("structure constant grids must have n^3 entries");
  AlgebraStructure a(std::move(name), dim);
  a.bracket_ = std::move(bracket);
  a.product_ = std::move(product);
  return a;
}

void AlgebraStructure::set_bracket(std::size_t i, std::size_t j, std::size_t k,
                                   const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("bracket index out of range");
  if (i == j && !value.is_zero())
    throw std::invalid_argument("bracket [e_i, e_i] must vanish");
  bracket_[index(i, j, k)] = value;
  bracket_[index(j, i, k)] = -value;
}

void AlgebraStructure::set_product(std::size_t i, std::size_t j, std::size_t k,
                                   const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("product index out of range");
  product_[index(i, j, k)] = value;
  product_[index(j, i, k)] = value;
}

Vector AlgebraStructure::bracket(std::size_t i, std::size_t j) const {
  return Vector(bracket_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0)),
                bracket_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0) + dim_));
}

Vector AlgebraStructure::product(std::size_t i, std::size_t j) const {
  return Vector(product_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0)),
                product_.begin() + static_cast<std::ptrdiff_t>(index(i, j, 0) + dim_));
}

Vector AlgebraStructure::bilinear(const Vector& grid, const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational w = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = grid[index(i, j, k)];
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

Vector AlgebraStructure::bracket(const Vector& u, const Vector& v) const {
  return bilinear(bracket_, u, v);
}

Vector AlgebraStructure::product(const Vector& u, const Vector& v) const {
  return bilinear(product_, u, v);
}

bool AlgebraStructure::bracket_is_zero() const { return is_zero(bracket_); }
bool AlgebraStructure::product_is_zero() const { return is_zero(product_); }

std::optional<InvariantViolation> AlgebraStructure::check_invariants() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (bracket_[index(i, j, k)] != -bracket_[index(j, i, k)])
          return InvariantViolation{InvariantViolation::Kind::bracket_antisymmetry, {i, j, k}};
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (product_[index(i, j, k)] != product_[index(j, i, k)])
          return InvariantViolation{InvariantViolation::Kind::product_symmetry, {i, j, k}};
  return std::nullopt;
}

AxiomVerdict check_lie_axioms(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(n, k);
        const Vector ei = unit_vector(n, i);
        const Vector ej = unit_vector(n, j);
        Vector r = a.bracket(a.bracket(i, j), ek) + a.bracket(a.bracket(j, k), ei) +
                   a.bracket(a.bracket(k, i), ej);
        if (!is_zero(r))
          return {AxiomVerdict::Status::failed, AxiomViolation{{i, j, k}, std::move(r)}};
      }
  return {AxiomVerdict::Status::passed, std::nullopt};
}

AxiomVerdict check_comm_assoc(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = a.product(a.product(i, j), unit_vector(n, k)) -
                   a.product(unit_vector(n, i), a.product(j, k));
        if (!is_zero(r))
          return {AxiomVerdict::Status::failed, AxiomViolation{{i, j, k}, std::move(r)}};
      }
  return {AxiomVerdict::Status::passed, std::nullopt};
}

Tensor3 leibnizator(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ej = unit_vector(n, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(n, k);
        out.set_value({i, j, k}, a.bracket(ei, a.product(j, k)) - a.product(a.bracket(i, j), ek) -
                                     a.product(ej, a.bracket(i, k)));
      }
    }
  }
  return out;
}

Tensor4 hm_tensor(const AlgebraStructure& a) {
  const std::size_t n = a.dim();
  const Tensor3 L = leibnizator(a);
  Tensor4 out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = a.product(x, y);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          const std::array<Vector, 3> args{xy, unit_vector(n, z), unit_vector(n, w)};
          Vector v = L.evaluate(args) - a.product(L.value({x, z, w}), unit_vector(n, y)) -
                     a.product(unit_vector(n, x), L.value({y, z, w}));
          out.set_value({x, y, z, w}, v);
        }
    }
  return out;
}

AxiomVerdict check_hm(const AlgebraStructure& a) {
  const Tensor4 N = hm_tensor(a);
  auto nonzero = N.nonzero_values();
  if (nonzero.empty()) return {AxiomVerdict::Status::passed, std::nullopt};
  auto& first = nonzero.front();
  return {AxiomVerdict::Status::failed,
          AxiomViolation{{first.args.begin(), first.args.end()}, std::move(first.value)}};
}

FmanVerdict is_fman(const AlgebraStructure& a) {
  FmanVerdict v;
  v.invariants = a.check_invariants();
  if (v.invariants) return v;
  v.lie = check_lie_axioms(a);
  v.comm_assoc = check_comm_assoc(a);
  if (v.lie.holds() && v.comm_assoc.holds()) v.hm = check_hm(a);
  return v;
}

bool is_poisson(const AlgebraStructure& a) { return leibnizator(a).is_zero(); }

}  // namespace fman
