#include "generators.hpp"

#include <stdexcept>

#include "fman/catalog.hpp"
#include "fman/io.hpp"
#include "fman/polynomial.hpp"

namespace fman::testing {

AlgebraStructure bundled_algebra(const std::string& name) {
  const auto entry = find_in_catalog(name);
  if (!entry) throw std::invalid_argument("not bundled: " + name);
  return parse_input(entry->json).algebra();
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Matrix red = rref(aug);
  if (red.rows() != n) throw std::invalid_argument("singular matrix");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (red(r, r) != Rational(1)) throw std::invalid_argument("singular matrix");
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  }
  return out;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, int bound, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
  return m;
}

Matrix random_invertible(std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(n, n, 2, rng);
    if (rank(m) == n) return m;
  }
}

Vector random_vector(std::size_t n, int bound, Rng& rng) {
  Vector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

AlgebraStructure change_basis(const AlgebraStructure& a, const Matrix& p) {
  const std::size_t n = a.dim();
  const Matrix pinv = inverse(p);
  Vector bracket(n * n * n), product(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = pinv.apply(a.bracket(p.column(i), p.column(j)));
      const Vector s = pinv.apply(a.product(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) {
        bracket[(i * n + j) * n + k] = b[k];
        product[(i * n + j) * n + k] = s[k];
      }
    }
  return AlgebraStructure::from_constants(a.name(), n, std::move(bracket), std::move(product));
}

AlgebraStructure combine(const AlgebraStructure& lie, const AlgebraStructure& product, std::string name) {
  const std::size_t n = lie.dim();
  if (product.dim() != n) throw std::invalid_argument("combine: dimension mismatch");
  Vector b(n * n * n), s(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        b[(i * n + j) * n + k] = lie.bracket_constant(i, j, k);
        s[(i * n + j) * n + k] = product.product_constant(i, j, k);
      }
  return AlgebraStructure::from_constants(std::move(name), n, std::move(b), std::move(s));
}

AlgebraStructure direct_sum(const AlgebraStructure& a, const AlgebraStructure& b) {
  const std::size_t na = a.dim(), n = a.dim() + b.dim();
  AlgebraStructure out(a.name() + "+" + b.name(), n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) {
        if (i < j) out.set_bracket(i, j, k, a.bracket_constant(i, j, k));
        out.set_product(i, j, k, a.product_constant(i, j, k));
      }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) {
        if (i < j) out.set_bracket(na + i, na + j, na + k, b.bracket_constant(i, j, k));
        out.set_product(na + i, na + j, na + k, b.product_constant(i, j, k));
      }
  return out;
}

namespace {

AlgebraStructure abelian(std::size_t n) { return AlgebraStructure("abelian" + std::to_string(n), n); }

AlgebraStructure r2() {
  AlgebraStructure a("r2", 2);
  a.set_bracket(0, 1, 1, 1);
  return a;
}

AlgebraStructure r3(const Rational& lambda) {
  AlgebraStructure a("r3_" + lambda.str(), 3);
  a.set_bracket(0, 1, 1, 1);
  a.set_bracket(0, 2, 2, lambda);
  return a;
}

AlgebraStructure sl2() {
  // h, e, f
  AlgebraStructure a("sl2", 3);
  a.set_bracket(0, 1, 1, 2);
  a.set_bracket(0, 2, 2, -2);
  a.set_bracket(1, 2, 0, 1);
  return a;
}

AlgebraStructure so3() {
  AlgebraStructure a("so3", 3);
  a.set_bracket(0, 1, 2, 1);
  a.set_bracket(1, 2, 0, 1);
  a.set_bracket(2, 0, 1, 1);
  return a;
}

AlgebraStructure filiform4() {
  AlgebraStructure a("n4", 4);
  a.set_bracket(0, 1, 2, 1);
  a.set_bracket(0, 2, 3, 1);
  return a;
}

AlgebraStructure heisenberg_2() {
  AlgebraStructure a("heis2", 3);
  a.set_bracket(0, 2, 1, 1);
  return a;
}

AlgebraStructure idempotents(std::size_t n) {
  AlgebraStructure a("idem" + std::to_string(n), n);
  for (std::size_t i = 0; i < n; ++i) a.set_product(i, i, i, 1);
  return a;
}

// Q[x]/(x^n) with basis 1, x, ..., x^{n-1}.
AlgebraStructure truncated(std::size_t n) {
  AlgebraStructure a("trunc" + std::to_string(n), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; i + j < n; ++j) a.set_product(i, j, i + j, 1);
  return a;
}

// xQ[x]/(x^{n+1}) with basis x, ..., x^n.
AlgebraStructure nilpotent(std::size_t n) {
  AlgebraStructure a("nil" + std::to_string(n), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; i + j + 1 < n; ++j) a.set_product(i, j, i + j + 1, 1);
  return a;
}

}  // namespace

AlgebraStructure heisenberg_1() {
  AlgebraStructure a("heis1", 3);
  a.set_bracket(1, 2, 0, 1);
  return a;
}

AlgebraStructure table_A3() {
  AlgebraStructure a = combine(heisenberg_1(), abelian(3), "A3");
  a.set_product(1, 1, 0, 1);
  a.set_product(2, 2, 0, 1);
  return a;
}

AlgebraStructure table_A4() {
  AlgebraStructure a = combine(heisenberg_1(), abelian(3), "A4");
  a.set_product(1, 2, 0, 1);
  a.set_product(2, 2, 1, 1);
  return a;
}

AlgebraStructure table_D1() {
  AlgebraStructure a = combine(heisenberg_2(), abelian(3), "D1");
  a.set_product(0, 0, 1, 1);
  a.set_product(2, 2, 2, 1);
  return a;
}

AlgebraStructure table_D2_printed() {
  AlgebraStructure a = combine(heisenberg_2(), abelian(3), "D2");
  a.set_product(0, 0, 1, 1);
  a.set_product(0, 2, 0, 1);
  return a;
}

std::vector<AlgebraStructure> lie_pool(std::size_t n) {
  switch (n) {
    case 1: return {abelian(1)};
    case 2: return {abelian(2), r2()};
    case 3:
      return {abelian(3), heisenberg_1(), heisenberg_2(), sl2(), so3(), r3(1), r3(-1), r3(2), r3(Rational(1, 2)),
              direct_sum(r2(), abelian(1))};
    case 4:
      return {abelian(4),
              filiform4(),
              direct_sum(heisenberg_1(), abelian(1)),
              direct_sum(sl2(), abelian(1)),
              direct_sum(so3(), abelian(1)),
              direct_sum(r2(), r2()),
              direct_sum(r3(-1), abelian(1)),
              direct_sum(r2(), abelian(2))};
    default: throw std::invalid_argument("lie_pool: dimension out of range");
  }
}

std::vector<AlgebraStructure> product_pool(std::size_t n) {
  std::vector<AlgebraStructure> out = {abelian(n), idempotents(n), truncated(n), nilpotent(n)};
  if (n >= 2) {
    out.push_back(direct_sum(idempotents(1), truncated(n - 1)));
    out.push_back(direct_sum(abelian(1), idempotents(n - 1)));
    out.push_back(direct_sum(truncated(1), nilpotent(n - 1)));
  }
  if (n >= 4) out.push_back(direct_sum(truncated(2), truncated(2)));
  return out;
}

std::vector<AlgebraStructure> fman_pool() {
  std::vector<AlgebraStructure> out = {table_A3(), table_A4(), table_D1()};
  for (const auto& p : product_pool(3)) out.push_back(combine(abelian(3), p, "abelian+" + p.name()));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& l : lie_pool(n)) out.push_back(l);  // zero product
  out.push_back(direct_sum(table_A3(), idempotents(1)));
  out.push_back(direct_sum(table_A4(), abelian(1)));
  out.push_back(direct_sum(table_D1(), idempotents(1)));
  out.push_back(direct_sum(table_D1(), abelian(1)));
  out.push_back(direct_sum(table_A4(), truncated(1)));
  return out;
}

AlgebraStructure random_lie(std::size_t n, Rng& rng) {
  const auto pool = lie_pool(n);
  return change_basis(pool[rng.index(pool.size())], random_invertible(n, rng));
}

AlgebraStructure random_product(std::size_t n, Rng& rng) {
  const auto pool = product_pool(n);
  return change_basis(pool[rng.index(pool.size())], random_invertible(n, rng));
}

AlgebraStructure random_lie_assoc_pair(Rng& rng, std::size_t max_dim) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_dim)));
  const AlgebraStructure lie = random_lie(n, rng);
  const AlgebraStructure prod = random_product(n, rng);
  return combine(lie, prod, lie.name() + "/" + prod.name());
}

AlgebraStructure random_fman(Rng& rng) {
  const auto pool = fman_pool();
  const AlgebraStructure& a = pool[rng.index(pool.size())];
  return change_basis(a, random_invertible(a.dim(), rng));
}

AlgebraStructure random_constants(std::size_t n, Rng& rng, double density) {
  AlgebraStructure a("random", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i < j && rng.coin(density)) a.set_bracket(i, j, k, rng.small_rational());
        if (rng.coin(density)) a.set_product(i, j, k, rng.small_rational());
      }
  return a;
}

Polynomial random_polynomial(std::size_t nvars, std::uint32_t degree, Rng& rng, double density) {
  Polynomial p(nvars);
  for (const auto& mono : monomials_up_to(nvars, degree))
    if (rng.coin(density)) p.add_term(mono, rng.uniform(-3, 3));
  return p;
}

PolyVectorField random_field(std::size_t nvars, std::uint32_t degree, Rng& rng, double density) {
  PolyVectorField x = PolyVectorField::zero(nvars);
  for (auto& c : x.components) c = random_polynomial(nvars, degree, rng, density);
  return x;
}

PolyFManifold random_manifold(std::size_t nvars, std::uint32_t degree, Rng& rng, double density) {
  PolyFManifold m(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    for (std::size_t j = i; j < nvars; ++j)
      for (std::size_t k = 0; k < nvars; ++k) m.set_s(i, j, k, random_polynomial(nvars, degree, rng, density));
  return m;
}

}  // namespace fman::testing
