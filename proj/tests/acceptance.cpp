// One PASS/FAIL line per acceptance criterion; exits 1 if any criterion fails.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fman/catalog.hpp"
#include "fman/connection.hpp"
#include "fman/coord_fman.hpp"
#include "fman/dpois.hpp"
#include "fman/holonomy.hpp"
#include "fman/io.hpp"
#include "fman/report.hpp"
#include "generators.hpp"

using namespace fman;
using namespace fman::testing;

namespace {

// Collects the first few reasons a criterion fails.
struct Check {
  std::vector<std::string> problems;
  std::size_t cases = 0;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && problems.size() < 4) problems.push_back(what);
  }
  bool ok() const { return problems.empty(); }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s (%zu checks)\n", c.ok() ? "PASS" : "FAIL", id, title.c_str(), c.cases);
  for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
  if (!c.ok()) ++failures;
  std::fflush(stdout);
}

std::vector<AlgebraStructure> bundled_algebras() {
  std::vector<AlgebraStructure> out;
  for (const auto& e : catalog()) {
    const InputSpec s = parse_input(e.json);
    if (s.kind == InputSpec::Kind::algebra) out.push_back(s.algebra());
  }
  return out;
}

std::vector<AlgebraStructure> bundled_fman() {
  std::vector<AlgebraStructure> out;
  for (const auto& a : bundled_algebras())
    if (is_fman(a).passed()) out.push_back(a);
  return out;
}

const char* table_names[] = {"n31_1_A3", "n31_1_A4", "n31_2_D1", "n31_2_D2"};

std::string yn(bool b) { return b ? "true" : "false"; }

Subspace span_of(std::initializer_list<Vector> vs) { return Subspace::span(3, std::vector<Vector>(vs)); }

// Expected table row for each bundled case.
struct Expected {
  bool poisson;
  std::optional<Subspace> dpois;  // nullopt: full space
  bool flat;
  std::size_t hol_dim;
  bool abelian;
};

}  // namespace

int main() {
  Rng rng(20261017);

  report(1, "Heisenberg table reproduction", [](Check& c) {
    const Expected expected[] = {
        {true, std::nullopt, true, 0, true},
        {false, span_of({e(3, 0), e(3, 1)}), true, 0, true},
        {false, span_of({e(3, 1), e(3, 2)}), false, 1, true},
        {false, span_of({e(3, 0), e(3, 1)}), false, 1, true},
    };
    for (int t = 0; t < 4; ++t) {
      const std::string name = table_names[t];
      const AnalysisReport r = run_analysis(bundled_algebra(name));
      if (!r.complete) {
        std::string why = "axioms fail";
        if (!r.axioms.comm_assoc.holds() && r.axioms.comm_assoc.witness) {
          const auto& w = *r.axioms.comm_assoc.witness;
          why = "product not associative at (e" + std::to_string(w.indices[0] + 1) + ",e" +
                std::to_string(w.indices[1] + 1) + ",e" + std::to_string(w.indices[2] + 1) +
                "), residual " + to_string(w.residual);
        }
        c.expect(false, name + ": " + why + ", so no characteristics are reported");
        continue;
      }
      const Expected& x = expected[t];
      const Subspace want = x.dpois ? *x.dpois : Subspace::full(3);
      c.expect(r.poisson == x.poisson, name + ": poisson=" + yn(r.poisson));
      c.expect(r.dpois.subspace == want, name + ": dpois basis " + r.dpois.subspace.basis().str());
      c.expect(r.flat() == x.flat, name + ": flat=" + yn(r.flat()));
      c.expect(r.holonomy.rank() == x.hol_dim, name + ": holonomy dim " + std::to_string(r.holonomy.rank()));
      c.expect(r.holonomy_diagnostics.abelian == x.abelian, name + ": abelian=" + yn(r.holonomy_diagnostics.abelian));
    }
  });

  report(2, "Leibnizator components of A4, D1, D2", [](Check& c) {
    using Entries = std::vector<std::pair<Tensor3::Index, Vector>>;
    const std::pair<const char*, Entries> cases[] = {
        {"n31_1_A4", {{{2, 2, 2}, {-1, 0, 0}}}},
        {"n31_2_D1", {{{0, 2, 2}, {0, 1, 0}}}},
        {"n31_2_D2", {{{2, 0, 2}, {0, -1, 0}}, {{2, 2, 0}, {0, -1, 0}}}},
    };
    for (const auto& [name, want] : cases) {
      Entries got;
      for (const auto& en : leibnizator(bundled_algebra(name)).nonzero_values()) got.emplace_back(en.args, en.value);
      c.expect(got == want, std::string(name) + ": unexpected Leibnizator components");
    }
  });

  report(3, "curvature by commutator equals curvature by split formula", [&rng](Check& c) {
    for (const char* name : table_names) {
      const AlgebraStructure a = bundled_algebra(name);
      const auto bad = curvature_mismatch(curvature_commutator(a), curvature_split(a));
      std::string where;
      if (bad) {
        const Matrix lhs = curvature_commutator(a).at(bad->first, bad->second);
        const Matrix rhs = curvature_split(a).at(bad->first, bad->second);
        where = std::string(name) + ": differ at R(e" + std::to_string(bad->first + 1) + ",e" +
                std::to_string(bad->second + 1) + "): commutator " + lhs.str() + " vs split " + rhs.str();
      }
      c.expect(!bad, where);
    }
    for (int t = 0; t < 200; ++t) {
      const AlgebraStructure a = random_lie_assoc_pair(rng);
      c.expect(!curvature_mismatch(curvature_commutator(a), curvature_split(a)), "random pair " + a.name());
    }
  });

  report(4, "torsion vanishes for symmetric products", [&rng](Check& c) {
    for (const auto& a : bundled_algebras())
      if (!a.check_invariants()) c.expect(torsion(a).is_zero(), a.name());
    for (int t = 0; t < 200; ++t) {
      const AlgebraStructure a = random_constants(static_cast<std::size_t>(rng.uniform(1, 4)), rng);
      c.expect(torsion(a).is_zero(), "random " + std::to_string(t));
    }
  });

  report(5, "D1 holonomy generator is J", [](Check& c) {
    const AlgebraStructure a = bundled_algebra("n31_2_D1");
    const EndoSubalgebra h = holonomy_algebra(a, curvature_commutator(a));
    c.expect(h.rank() == 1, "holonomy dim " + std::to_string(h.rank()));
    if (h.rank() != 1) return;
    Matrix x = h.element(0);
    Rational pivot;
    for (const auto& v : x.entries())
      if (!v.is_zero()) {
        pivot = v;
        break;
      }
    x *= Rational(1) / pivot;
    Matrix j(3, 3);
    j(1, 2) = 1;
    c.expect(x == j, "basis element " + x.str());
    c.expect((x * x).is_zero(), "J^2 != 0");
  });

  report(6, "endomorphism identities for ad, A and L", [&rng](Check& c) {
    for (int t = 0; t < 200; ++t) {
      const AlgebraStructure a = random_fman(rng);
      const std::size_t n = a.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector u = e(n, i), v = e(n, j), uv = a.bracket(i, j);
          const Matrix l_uv = leibniz_endo(a, u, v), l_vu = leibniz_endo(a, v, u);
          c.expect(commutator(ad(a, u), a_endo(a, v)) == a_endo(a, uv) + l_uv, "(ii) " + a.name());
          c.expect(commutator(a_endo(a, u), a_endo(a, v)) ==
                       a_endo(a, uv) + Rational(-1, 4) * ad(a, uv) + Rational(1, 2) * (l_uv - l_vu),
                   "(iii) " + a.name());
        }
    }
  });

  report(7, "D_Pois fiber closures on bundled F_man inputs", [](Check& c) {
    for (const auto& a : bundled_fman()) {
      const ClosureVerdict v = check_dpois_closures(a, dpois_fiber(a));
      c.expect(v.bracket_closed, a.name() + ": not closed under bracket");
      c.expect(v.circ_closed, a.name() + ": not closed under product");
      c.expect(v.autoparallel, a.name() + ": not autoparallel");
    }
  });

  report(8, "contracted Lie derivative of S equals the field Leibnizator", [&rng](Check& c) {
    for (int t = 0; t < 120; ++t) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      const PolyFManifold m = random_manifold(n, 2, rng);
      const PolyVectorField x = random_field(n, 2, rng), y = random_field(n, 2, rng), z = random_field(n, 2, rng);
      c.expect(contract(lie_derivative_S(m, x), y, z) == leibnizator_fields(m, x, y, z),
               "instance " + std::to_string(t));
    }
  });

  report(9, "splitting verdicts on block examples", [&rng](Check& c) {
    for (int t = 0; t < 24; ++t) {
      // x-block: variables [0, leaves), t-block: the rest.
      const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
      const std::size_t leaves = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(n) - 1));
      PolyFManifold m(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            Polynomial p(n);
            const Polynomial source = random_polynomial(n - leaves, 2, rng, 0.3);
            for (const auto& [mono, coef] : source.terms()) {
              Exponents full(leaves, 0);
              full.insert(full.end(), mono.begin(), mono.end());
              p.add_term(full, coef);
            }
            m.set_s(i, j, k, p);
          }
      // Guarantee genuine dependence on the first t variable.
      Polynomial tvar = Polynomial::variable(n, leaves);
      m.set_s(n - 1, n - 1, n - 1, m.s(n - 1, n - 1, n - 1) + tvar);

      std::vector<std::size_t> x_block(leaves);
      for (std::size_t l = 0; l < leaves; ++l) x_block[l] = l;
      const SplittingVerdict good = splitting_check(m, x_block);
      c.expect(good.leaf_derivatives_zero && good.leaf_fields_kill_S, "x-block rejected, example " + std::to_string(t));

      for (std::size_t l = leaves; l < n; ++l) {
        bool depends = false;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) depends |= !m.s(i, j, k).partial(l).is_zero();
        if (!depends) continue;
        const std::vector<std::size_t> leaf{l};
        const SplittingVerdict bad = splitting_check(m, leaf);
        c.expect(!bad.leaf_derivatives_zero && bad.derivative_witness, "t-variable accepted as leaf");
        c.expect(bad.coherent(), "sub-verdicts disagree, example " + std::to_string(t));
      }
      c.expect(good.coherent(), "sub-verdicts disagree, example " + std::to_string(t));
    }
  });

  report(10, "Poisson holonomy and its extension lie in the holonomy algebra", [](Check& c) {
    for (const auto& a : bundled_fman()) {
      const EndoSubalgebra h = holonomy_algebra(a, curvature_commutator(a));
      const InclusionVerdict basic = check_inclusion(poisson_holonomy(a), h);
      const InclusionVerdict extended = check_inclusion(extended_poisson_holonomy(a), h);
      c.expect(basic.included, a.name() + ": ad[g,g] + A[g,[g,g]] not inside, witness " +
                                   (basic.witness ? basic.witness->str() : std::string("?")));
      c.expect(extended.included, a.name() + ": extension by L(g,g) not inside, witness " +
                                      (extended.witness ? extended.witness->str() : std::string("?")) +
                                      ", holonomy dim " + std::to_string(h.rank()));
    }
  });

  report(11, "first Bianchi identity", [&rng](Check& c) {
    std::vector<AlgebraStructure> inputs = bundled_fman();
    for (int t = 0; t < 200; ++t) inputs.push_back(random_fman(rng));
    for (const auto& a : inputs) {
      const std::size_t n = a.dim();
      const CurvatureReport r = curvature_commutator(a);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const Vector cyc = r.at(i, j).apply(e(n, k)) + r.at(j, k).apply(e(n, i)) + r.at(k, i).apply(e(n, j));
            c.expect(is_zero(cyc), a.name());
          }
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
