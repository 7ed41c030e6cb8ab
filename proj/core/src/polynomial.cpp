#include "fman/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fman {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

void enumerate(std::size_t var, std::uint32_t remaining, Exponents& current,
               std::vector<Exponents>& out) {
  if (var == current.size()) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Exponents> monomials_up_to(std::size_t nvars, std::uint32_t degree) {
  std::vector<Exponents> out;
  Exponents current(nvars, 0);
  enumerate(0, degree, current, out);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[var] = 1;
  return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents exps, const Rational& c) {
  if (exps.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
  Polynomial p(nvars);
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::uint32_t Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  Polynomial out(nvars_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] == 0) continue;
    Exponents e = exps;
    --e[var];
    out.add_term(e, c * Rational(static_cast<long>(exps[var])));
  }
  return out;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational out;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      for (std::uint32_t k = 0; k < exps[v]; ++k) term *= point[v];
    out += term;
  }
  return out;
}

void Polynomial::require_same(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials in different variable counts");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same(o);
  for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace fman
