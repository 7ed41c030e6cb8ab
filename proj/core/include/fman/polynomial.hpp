#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fman/rational.hpp"

namespace fman {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order: lower total degree first, ties broken
/// lexicographically on the exponent vectors.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All monomials in `nvars` variables of total degree <= `degree`, in graded
/// lexicographic order.
std::vector<Exponents> monomials_up_to(std::size_t nvars, std::uint32_t degree);

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(std::size_t nvars, Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t degree() const;
  Rational coefficient(const Exponents& exps) const;

  /// Adds c * x^exps, dropping the term if it cancels.
  void add_term(const Exponents& exps, const Rational& c);

  Polynomial partial(std::size_t var) const;
  Rational evaluate(const Vector& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form such as "2*x1^2*x3 - 1/2*x2 + 1".
  std::string str() const;

 private:
  void require_same(const Polynomial& o) const;

  std::size_t nvars_;
  Terms terms_;
};

}  // namespace fman
