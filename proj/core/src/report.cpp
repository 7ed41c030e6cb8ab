#include "fman/report.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fman {

using nlohmann::json;

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>* sink) : sink_(sink), start_(std::chrono::steady_clock::now()) {}

  void lap(const char* stage) {
    if (!sink_) return;
    const auto now = std::chrono::steady_clock::now();
    sink_->push_back({stage, std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>* sink_;
  std::chrono::steady_clock::time_point start_;
};

void guard_curvature(const AnalysisReport& r) {
  if (!r.complete) return;
  if (auto bad = curvature_mismatch(r.curvature_commutator, r.curvature_split))
    throw ReportIntegrityError("curvature formulas disagree at R(e" + std::to_string(bad->first + 1) + ", e" +
                               std::to_string(bad->second + 1) + ")");
}

// "e2", "-e1 + 1/2*e3", "0"
std::string vector_expr(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Rational mag = v[i].sign() < 0 ? -v[i] : v[i];
    if (out.empty()) out += v[i].sign() < 0 ? "-" : "";
    else out += v[i].sign() < 0 ? " - " : " + ";
    if (mag != Rational(1)) out += mag.str() + "*";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

json one_based(std::span<const std::size_t> idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i + 1);
  return out;
}

const char* status_name(AxiomVerdict::Status s) {
  switch (s) {
    case AxiomVerdict::Status::passed: return "passed";
    case AxiomVerdict::Status::failed: return "failed";
    case AxiomVerdict::Status::skipped: return "skipped";
  }
  return "skipped";
}

json verdict_json(const AxiomVerdict& v) {
  json out = {{"status", status_name(v.status)}};
  if (v.witness)
    out["witness"] = {{"indices", one_based(v.witness->indices)}, {"residual", vector_json(v.witness->residual)}};
  return out;
}

json axioms_json(const FmanVerdict& v) {
  json out;
  if (v.invariants) {
    out["invariants"] = {
        {"status", "failed"},
        {"kind", v.invariants->kind == InvariantViolation::Kind::bracket_antisymmetry ? "bracket_antisymmetry"
                                                                                     : "product_symmetry"},
        {"index", one_based(v.invariants->index)}};
  } else {
    out["invariants"] = {{"status", "passed"}};
  }
  out["lie"] = verdict_json(v.lie);
  out["comm_assoc"] = verdict_json(v.comm_assoc);
  out["hm"] = verdict_json(v.hm);
  return out;
}

json inclusion_json(const EndoSubalgebra& p, const InclusionVerdict& v) {
  json out = {{"included", v.included}, {"dim", p.rank()}};
  if (v.witness) out["witness"] = matrix_json(*v.witness);
  return out;
}

json subspace_rows(const Subspace& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.rank(); ++i) out.push_back(vector_json(s.basis_vector(i)));
  return out;
}

std::string markdown_matrix(const Matrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent + "| ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += m(r, c).str() + " | ";
    out.pop_back();
    out += "\n";
    if (r == 0) {
      out += indent + "|";
      for (std::size_t c = 0; c < m.cols(); ++c) out += "---|";
      out += "\n";
    }
  }
  return out;
}

std::string axiom_line(const char* label, const AxiomVerdict& v) {
  std::string out = std::string("- ") + label + ": " + status_name(v.status);
  if (v.witness) {
    out += " at (";
    for (std::size_t i = 0; i < v.witness->indices.size(); ++i)
      out += (i ? "," : "") + std::to_string(v.witness->indices[i] + 1);
    out += "), residual " + vector_expr(v.witness->residual);
  }
  return out + "\n";
}

}  // namespace

AnalysisReport run_analysis(const AlgebraStructure& a, bool record_timings) {
  AnalysisReport r;
  StageClock clock(record_timings ? &r.timings : nullptr);
  r.name = a.name();
  r.dim = a.dim();
  r.axioms = is_fman(a);
  clock.lap("axioms");
  if (!r.axioms.passed()) return r;

  const Tensor3 l = leibnizator(a);
  r.leibnizator = l.nonzero_values();
  r.poisson = r.leibnizator.empty();
  clock.lap("leibnizator");

  r.dpois = dpois_fiber(a);
  r.dpois_closures = check_dpois_closures(a, r.dpois);
  clock.lap("dpois");

  r.torsion_zero = torsion(a).is_zero();
  r.curvature_commutator = curvature_commutator(a);
  r.curvature_split = curvature_split(a);
  clock.lap("curvature");

  r.holonomy = holonomy_algebra(a, r.curvature_commutator);
  r.holonomy_diagnostics = holonomy_diagnostics(r.holonomy);
  r.holonomy_soundness = verify_holonomy(a, r.curvature_commutator, r.holonomy);
  clock.lap("holonomy");

  r.poisson_holonomy = poisson_holonomy(a);
  r.extended_poisson_holonomy = extended_poisson_holonomy(a);
  r.inclusion = check_inclusion(r.poisson_holonomy, r.holonomy);
  r.extended_inclusion = check_inclusion(r.extended_poisson_holonomy, r.holonomy);
  clock.lap("inclusions");

  r.complete = true;
  guard_curvature(r);
  return r;
}

std::string emit_report(const AnalysisReport& r, ReportFormat format) {
  guard_curvature(r);

  if (format == ReportFormat::json) {
    json doc = {{"name", r.name}, {"dim", r.dim}, {"axioms", axioms_json(r.axioms)}, {"complete", r.complete}};
    if (r.complete) {
      json leib = json::array();
      for (const auto& e : r.leibnizator) leib.push_back({{"args", one_based(e.args)}, {"value", vector_json(e.value)}});
      doc["poisson"] = r.poisson;
      doc["leibnizator"] = std::move(leib);
      doc["dpois"] = {{"rank", r.dpois.rank()},
                      {"basis", subspace_rows(r.dpois.subspace)},
                      {"closures",
                       {{"bracket", r.dpois_closures.bracket_closed},
                        {"circ", r.dpois_closures.circ_closed},
                        {"autoparallel", r.dpois_closures.autoparallel}}}};
      doc["torsion_zero"] = r.torsion_zero;
      doc["flat"] = r.flat();

      json curv = json::array();
      for (std::size_t p = 0; p < r.curvature_commutator.pairs.size(); ++p) {
        const auto [i, j] = r.curvature_commutator.pairs[p];
        curv.push_back({{"pair", {i + 1, j + 1}},
                        {"commutator", matrix_json(r.curvature_commutator.total[p])},
                        {"split", matrix_json(r.curvature_split.total[p])},
                        {"intrinsic", matrix_json(r.curvature_split.intrinsic[p])},
                        {"leibniz", matrix_json(r.curvature_split.leibniz[p])}});
      }
      doc["curvature"] = std::move(curv);

      json basis = json::array();
      for (const auto& x : r.holonomy.basis()) basis.push_back(matrix_json(x));
      doc["holonomy"] = {{"dim", r.holonomy.rank()},
                         {"abelian", r.holonomy_diagnostics.abelian},
                         {"nilpotent", r.holonomy_diagnostics.nilpotent_generators},
                         {"basis", std::move(basis)},
                         {"closure_rounds", r.holonomy.rounds},
                         {"sound", r.holonomy_soundness.all()}};
      doc["inclusions"] = {{"poisson_holonomy", inclusion_json(r.poisson_holonomy, r.inclusion)},
                           {"extended_poisson_holonomy",
                            inclusion_json(r.extended_poisson_holonomy, r.extended_inclusion)}};
    }
    if (!r.timings.empty()) {
      json t = json::object();
      for (const auto& s : r.timings) t[s.stage] = s.milliseconds;
      doc["timings_ms"] = std::move(t);
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream md;
  md << "# " << (r.name.empty() ? "algebra" : r.name) << " (dim " << r.dim << ")\n\n";
  md << "## Axioms\n\n";
  if (r.axioms.invariants) {
    const auto& v = *r.axioms.invariants;
    md << "- structure constants: "
       << (v.kind == InvariantViolation::Kind::bracket_antisymmetry ? "bracket not antisymmetric"
                                                                    : "product not symmetric")
       << " at (" << v.index[0] + 1 << "," << v.index[1] + 1 << "," << v.index[2] + 1 << ")\n";
  }
  md << axiom_line("Jacobi identity", r.axioms.lie);
  md << axiom_line("commutative associative product", r.axioms.comm_assoc);
  md << axiom_line("Hertling-Manin condition", r.axioms.hm);
  if (!r.complete) {
    md << "\nNot an F_man-algebra; no geometry computed.\n";
    return md.str();
  }

  md << "\n## Characteristics\n\n";
  if (r.poisson) {
    md << "- It is a Poisson algebra.\n";
  } else {
    md << "- It is not a Poisson algebra. Nonzero Leibnizator values:\n";
    for (const auto& e : r.leibnizator)
      md << "  - L(e" << e.args[0] + 1 << ", e" << e.args[1] + 1 << ", e" << e.args[2] + 1
         << ") = " << vector_expr(e.value) << "\n";
  }
  md << "- The Poisson-algebra distribution has rank " << r.dpois.rank();
  if (r.dpois.rank() > 0) {
    md << ", spanned by ";
    for (std::size_t i = 0; i < r.dpois.rank(); ++i)
      md << (i ? ", " : "") << vector_expr(r.dpois.subspace.basis_vector(i));
  }
  md << ".\n";
  md << "  - closed under bracket: " << (r.dpois_closures.bracket_closed ? "yes" : "no")
     << "; under product: " << (r.dpois_closures.circ_closed ? "yes" : "no")
     << "; autoparallel: " << (r.dpois_closures.autoparallel ? "yes" : "no") << "\n";
  md << "- The canonical connection is " << (r.torsion_zero ? "torsion-free" : "NOT torsion-free") << ".\n";
  md << "- The canonical connection is " << (r.flat() ? "flat" : "not flat") << ".\n";
  if (!r.flat()) {
    for (std::size_t p = 0; p < r.curvature_commutator.pairs.size(); ++p) {
      if (r.curvature_commutator.total[p].is_zero()) continue;
      const auto [i, j] = r.curvature_commutator.pairs[p];
      md << "  - R(e" << i + 1 << ", e" << j + 1 << "):\n\n"
         << markdown_matrix(r.curvature_commutator.total[p], "    ") << "\n";
    }
  }
  md << "- The holonomy algebra has dimension " << r.holonomy.rank();
  if (r.holonomy.rank() > 0)
    md << " and is " << (r.holonomy_diagnostics.abelian ? "abelian" : "not abelian")
       << (r.holonomy_diagnostics.nilpotent_generators ? ", with nilpotent basis endomorphisms" : "");
  md << ".\n";
  for (std::size_t b = 0; b < r.holonomy.rank(); ++b)
    md << "  - basis element " << b + 1 << ":\n\n" << markdown_matrix(r.holonomy.element(b), "    ") << "\n";
  md << "- ad[g,g] + A[g,[g,g]] (dim " << r.poisson_holonomy.rank() << ") is "
     << (r.inclusion.included ? "contained" : "NOT contained") << " in the holonomy algebra.\n";
  md << "- ad[g,g] + A[g,[g,g]] + L(g,g) (dim " << r.extended_poisson_holonomy.rank() << ") is "
     << (r.extended_inclusion.included ? "contained" : "NOT contained") << " in the holonomy algebra.\n";
  if (!r.timings.empty()) {
    md << "\n## Timings\n\n";
    for (const auto& s : r.timings) md << "- " << s.stage << ": " << s.milliseconds << " ms\n";
  }
  return md.str();
}

CoordReport run_coord_check(const PolyFManifold& m, std::string name, std::uint32_t degree_bound,
                            const std::vector<std::size_t>& leaf_vars) {
  CoordReport r;
  r.name = std::move(name);
  r.nvars = m.nvars();
  r.hm = hm_tensor_field(m);
  r.degree_bound = degree_bound;
  const DpoisSystem sys = assemble_dpois_system(m, degree_bound);
  r.equations = sys.coefficients.rows();
  r.unknowns = sys.coefficients.cols();
  r.ansatz = solve_dpois_ansatz(m, degree_bound);
  r.rank_at_origin = r.ansatz.rank_at(zero_vector(m.nvars()));
  r.leaf_vars = leaf_vars;
  if (!leaf_vars.empty()) r.splitting = splitting_check(m, leaf_vars);
  return r;
}

std::string emit_coord_report(const CoordReport& r, ReportFormat format) {
  auto field_strings = [](const PolyVectorField& x) {
    std::vector<std::string> out;
    for (const auto& c : x.components) out.push_back(c.str());
    return out;
  };

  if (format == ReportFormat::json) {
    json doc = {{"name", r.name}, {"nvars", r.nvars}};
    json hm = {{"zero", r.hm.zero}};
    if (r.hm.index) hm["witness"] = {{"index", one_based(*r.hm.index)}, {"component", r.hm.component.str()}};
    doc["hm_tensor"] = std::move(hm);
    json basis = json::array();
    for (const auto& x : r.ansatz.basis) basis.push_back(field_strings(x));
    doc["dpois_ansatz"] = {{"degree_bound", r.degree_bound},
                           {"equations", r.equations},
                           {"unknowns", r.unknowns},
                           {"solutions", r.ansatz.basis.size()},
                           {"basis", std::move(basis)},
                           {"rank_at_origin", r.rank_at_origin}};
    if (r.splitting) {
      const auto& s = *r.splitting;
      json sp = {{"leaf_vars", one_based(r.leaf_vars)},
                 {"leaf_derivatives_zero", s.leaf_derivatives_zero},
                 {"leaf_fields_kill_S", s.leaf_fields_kill_S},
                 {"coherent", s.coherent()}};
      if (s.derivative_witness) sp["derivative_witness"] = one_based(*s.derivative_witness);
      if (s.lie_witness) sp["lie_witness"] = one_based(*s.lie_witness);
      doc["splitting"] = std::move(sp);
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream md;
  md << "# " << (r.name.empty() ? "poly-manifold" : r.name) << " (nvars " << r.nvars << ")\n\n";
  md << "- Hertling-Manin tensor field: " << (r.hm.zero ? "vanishes" : "does NOT vanish");
  if (r.hm.index) {
    const auto& ix = *r.hm.index;
    md << "; N(d" << ix[0] + 1 << ", d" << ix[1] + 1 << ", d" << ix[2] + 1 << ", d" << ix[3] + 1 << ")^" << ix[4] + 1
       << " = " << r.hm.component.str();
  }
  md << "\n";
  md << "- Polynomial solutions of L_X S = 0 with degree <= " << r.degree_bound << ": " << r.ansatz.basis.size()
     << " (system " << r.equations << " x " << r.unknowns << ")\n";
  for (const auto& x : r.ansatz.basis) {
    md << "  - X = (";
    const auto comps = field_strings(x);
    for (std::size_t i = 0; i < comps.size(); ++i) md << (i ? ", " : "") << comps[i];
    md << ")\n";
  }
  md << "- Rank of the solution span at the origin: " << r.rank_at_origin << "\n";
  if (r.splitting) {
    const auto& s = *r.splitting;
    md << "- Splitting along leaf variables";
    for (std::size_t v : r.leaf_vars) md << " x" << v + 1;
    md << ": components independent of leaf variables: " << (s.leaf_derivatives_zero ? "yes" : "no")
       << "; leaf coordinate fields preserve S: " << (s.leaf_fields_kill_S ? "yes" : "no") << "\n";
  }
  return md.str();
}

}  // namespace fman
