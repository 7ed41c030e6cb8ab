#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fman/matrix.hpp"
#include "fman/polynomial.hpp"
#include "fman/rational.hpp"

namespace fman {

/// Vector field X = sum_i X^i(x) d_i with polynomial components.
struct PolyVectorField {
  std::vector<Polynomial> components;

  static PolyVectorField zero(std::size_t nvars);
  /// The coordinate field d/dx^l.
  static PolyVectorField coordinate(std::size_t nvars, std::size_t l);
  static PolyVectorField constant(std::size_t nvars, const Vector& v);

  std::size_t size() const { return components.size(); }
  const Polynomial& operator[](std::size_t i) const { return components[i]; }
  Polynomial& operator[](std::size_t i) { return components[i]; }
  bool is_zero() const;
  Vector evaluate(const Vector& point) const;

  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;
};

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
PolyVectorField operator*(const Polynomial& f, const PolyVectorField& x);

/// Grid of polynomials T^k_ij, addressed at(i, j, k).
class PolyTensorField {
 public:
  explicit PolyTensorField(std::size_t nvars = 0);

  std::size_t nvars() const { return nvars_; }
  Polynomial& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * nvars_ + j) * nvars_ + k]; }
  const Polynomial& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * nvars_ + j) * nvars_ + k];
  }
  bool is_zero() const;

  friend bool operator==(const PolyTensorField&, const PolyTensorField&) = default;

 private:
  std::size_t nvars_;
  std::vector<Polynomial> data_;
};

/// F-manifold data on a polynomial chart: the symmetric (1,2)-tensor S with
/// S(d_i, d_j) = sum_k S^k_ij(x) d_k.
class PolyFManifold {
 public:
  explicit PolyFManifold(std::size_t nvars = 0) : s_(nvars) {}
  /// Wraps a raw grid without symmetrising it.
  static PolyFManifold from_grid(PolyTensorField grid);

  std::size_t nvars() const { return s_.nvars(); }
  const Polynomial& s(std::size_t i, std::size_t j, std::size_t k) const { return s_.at(i, j, k); }
  const PolyTensorField& grid() const { return s_; }

  /// Sets S^k_ij and S^k_ji.
  void set_s(std::size_t i, std::size_t j, std::size_t k, const Polynomial& p);

  /// First (i, j, k) with S^k_ij != S^k_ji.
  std::optional<std::array<std::size_t, 3>> symmetry_violation() const;

  friend bool operator==(const PolyFManifold&, const PolyFManifold&) = default;

 private:
  PolyTensorField s_;
};

/// (L_X S)^k_ij = sum_l X^l d_l S^k_ij - S^l_ij d_l X^k + S^k_lj d_i X^l + S^k_il d_j X^l.
PolyTensorField lie_derivative_S(const PolyFManifold& m, const PolyVectorField& x);

/// T(Y, Z)^k = sum_ij T^k_ij Y^i Z^j.
PolyVectorField contract(const PolyTensorField& t, const PolyVectorField& y, const PolyVectorField& z);

/// [X, Y]^k = sum_l X^l d_l Y^k - Y^l d_l X^k.
PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y);

/// (X o Y)^k = sum_ij S^k_ij X^i Y^j.
PolyVectorField field_product(const PolyFManifold& m, const PolyVectorField& x, const PolyVectorField& y);

/// L(X, Y, Z) = [X, Y o Z] - [X, Y] o Z - Y o [X, Z], from brackets and products only.
PolyVectorField leibnizator_fields(const PolyFManifold& m, const PolyVectorField& x,
                                   const PolyVectorField& y, const PolyVectorField& z);

struct HmFieldVerdict {
  bool zero = true;
  std::optional<std::array<std::size_t, 5>> index;  // (i, j, a, b, k), zero-based
  Polynomial component;                             // N(d_i, d_j, d_a, d_b)^k at `index`
};

/// Evaluates the Hertling-Manin tensor field on every quadruple of
/// coordinate fields and reports the first nonzero component.
HmFieldVerdict hm_tensor_field(const PolyFManifold& m);

/// The linear system L_X S = 0 for X^r ranging over polynomials of total
/// degree <= degree_bound, one row per (i <= j, k, monomial).
struct DpoisSystem {
  std::size_t nvars = 0;
  std::uint32_t degree_bound = 0;
  Matrix coefficients;
  std::vector<std::pair<std::size_t, Exponents>> unknowns;  // (component r, monomial)
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Exponents>> equations;

  PolyVectorField field(const Vector& unknown_values) const;
  Vector unknown_values(const PolyVectorField& x) const;
};

DpoisSystem assemble_dpois_system(const PolyFManifold& m, std::uint32_t degree_bound);

/// Polynomial solutions of L_X S = 0 within the degree bound. These are
/// solutions on the whole chart, not the full local distribution.
struct AnsatzSolution {
  std::uint32_t degree_bound = 0;
  std::vector<PolyVectorField> basis;

  /// Dimension of span{X(p)} over the basis fields at a rational point.
  std::size_t rank_at(const Vector& point) const;
};

AnsatzSolution solve_dpois_ansatz(const PolyFManifold& m, std::uint32_t degree_bound);

struct SplittingVerdict {
  bool leaf_derivatives_zero = true;
  bool leaf_fields_kill_S = true;
  // (l, i, j, k), zero-based, for the first failure of each check.
  std::optional<std::array<std::size_t, 4>> derivative_witness;
  std::optional<std::array<std::size_t, 4>> lie_witness;

  bool coherent() const { return leaf_derivatives_zero == leaf_fields_kill_S; }
};

/// Checks d S^k_ij / d x^l = 0 and, separately, L_{d/dx^l} S = 0 for every
/// leaf variable l (zero-based).
SplittingVerdict splitting_check(const PolyFManifold& m, std::span<const std::size_t> leaf_vars);

}  // namespace fman
