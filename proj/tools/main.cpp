// fman: command line front end for the F_man-algebra toolkit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fman/catalog.hpp"
#include "fman/io.hpp"
#include "fman/report.hpp"

namespace {

using fman::ReportFormat;
using nlohmann::json;

bool use_color() {
  const char* env = std::getenv("FMAN_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDERR_FILENO) != 0;
}

void diag(const std::string& level, const std::string& msg) {
  if (use_color()) {
    const char* code = level == "error" ? "\033[31m" : "\033[33m";
    std::cerr << code << level << ":\033[0m " << msg << "\n";
  } else {
    std::cerr << level << ": " << msg << "\n";
  }
}

struct Loaded {
  fman::InputSpec spec;
  std::string source;
};

// A path on disk, or the name of a bundled example.
Loaded load(const std::string& arg) {
  std::string bytes;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
  } else if (auto entry = fman::find_in_catalog(arg)) {
    bytes = entry->json;
  } else {
    throw fman::InputError(fman::InputError::Kind::parse, "no such file or bundled example: " + arg);
  }
  Loaded out{fman::parse_input(bytes), arg};
  if (out.spec.name.empty()) out.spec.name = std::filesystem::path(arg).stem().string();
  return out;
}

fman::AlgebraStructure as_algebra(const Loaded& in) {
  if (in.spec.kind != fman::InputSpec::Kind::algebra)
    throw fman::InputError(fman::InputError::Kind::validation, in.source + ": expected an algebra input");
  const auto& a = in.spec.algebra();
  return fman::AlgebraStructure::from_constants(in.spec.name, a.dim(), [&] {
    fman::Vector v;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) v.push_back(a.bracket_constant(i, j, k));
    return v;
  }(), [&] {
    fman::Vector v;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k) v.push_back(a.product_constant(i, j, k));
    return v;
  }());
}

ReportFormat pick_format(const std::string& flag, const fman::InputSpec& spec) {
  if (flag == "md") return ReportFormat::markdown;
  if (flag == "json") return ReportFormat::json;
  return spec.options.format.value_or(ReportFormat::json);
}

void report_axiom_failure(const fman::AnalysisReport& r) {
  const auto& v = r.axioms;
  if (v.invariants) diag("error", r.name + ": structure constants violate (anti)symmetry");
  else if (!v.lie.holds()) diag("error", r.name + ": Jacobi identity fails");
  else if (!v.comm_assoc.holds()) diag("error", r.name + ": product is not associative");
  else if (!v.hm.holds()) diag("error", r.name + ": Hertling-Manin condition fails");
}

// Keeps only the listed top-level keys of a JSON report.
std::string json_subset(const std::string& full, std::initializer_list<const char*> keys) {
  const json doc = json::parse(full);
  json out = json::object();
  for (const char* k : keys)
    if (doc.contains(k)) out[k] = doc[k];
  return out.dump(2) + "\n";
}

int cmd_verify(const std::string& file, const std::string& format) {
  const Loaded in = load(file);
  const fman::AlgebraStructure a = as_algebra(in);
  fman::AnalysisReport r;
  r.name = a.name();
  r.dim = a.dim();
  r.axioms = fman::is_fman(a);
  const ReportFormat f = pick_format(format, in.spec);
  if (f == ReportFormat::json) std::cout << json_subset(fman::emit_report(r, f), {"name", "dim", "axioms"});
  else std::cout << fman::emit_report(r, f);
  if (!r.axioms.passed()) {
    report_axiom_failure(r);
    return fman::exit_code::axiom_failure;
  }
  return fman::exit_code::ok;
}

int cmd_analyze(const std::vector<std::string>& files, const std::string& format, bool timings) {
  // Inputs are parsed up front so that input errors are reported before any work.
  std::vector<Loaded> inputs;
  for (const auto& f : files) inputs.push_back(load(f));

  std::vector<std::future<fman::AnalysisReport>> jobs;
  for (const auto& in : inputs)
    jobs.push_back(std::async(std::launch::async, [&in, timings] { return fman::run_analysis(as_algebra(in), timings); }));

  int code = fman::exit_code::ok;
  std::vector<std::string> outputs;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const fman::AnalysisReport r = jobs[i].get();
    if (!r.complete) report_axiom_failure(r);
    code = std::max(code, r.exit_code());
    outputs.push_back(fman::emit_report(r, pick_format(format, inputs[i].spec)));
  }

  const bool json_out = pick_format(format, inputs.front().spec) == ReportFormat::json;
  if (outputs.size() == 1 || !json_out) {
    for (std::size_t i = 0; i < outputs.size(); ++i) std::cout << (i ? "\n" : "") << outputs[i];
  } else {
    json arr = json::array();
    for (const auto& o : outputs) arr.push_back(json::parse(o));
    std::cout << arr.dump(2) << "\n";
  }
  return code;
}

int cmd_dpois(const std::string& file, const std::string& format) {
  const Loaded in = load(file);
  const fman::AnalysisReport r = fman::run_analysis(as_algebra(in));
  if (!r.complete) {
    report_axiom_failure(r);
    return r.exit_code();
  }
  if (pick_format(format, in.spec) == ReportFormat::json) {
    std::cout << json_subset(fman::emit_report(r, ReportFormat::json), {"name", "poisson", "leibnizator", "dpois"});
  } else {
    std::cout << "# " << r.name << "\n\n- rank " << r.dpois.rank() << "\n";
    for (std::size_t i = 0; i < r.dpois.rank(); ++i)
      std::cout << "- " << fman::to_string(r.dpois.subspace.basis_vector(i)) << "\n";
  }
  return fman::exit_code::ok;
}

int cmd_holonomy(const std::string& file, const std::string& format) {
  const Loaded in = load(file);
  const fman::AnalysisReport r = fman::run_analysis(as_algebra(in));
  if (!r.complete) {
    report_axiom_failure(r);
    return r.exit_code();
  }
  for (const auto& line : r.holonomy.generators_log) diag("info", line);
  if (pick_format(format, in.spec) == ReportFormat::json) {
    std::cout << json_subset(fman::emit_report(r, ReportFormat::json),
                             {"name", "flat", "curvature", "holonomy", "inclusions"});
  } else {
    std::cout << "# " << r.name << "\n\n- holonomy dimension " << r.holonomy.rank() << "\n";
    for (std::size_t b = 0; b < r.holonomy.rank(); ++b)
      std::cout << "- basis element " << b + 1 << ":\n" << r.holonomy.element(b).str() << "\n";
  }
  return fman::exit_code::ok;
}

int cmd_coord_check(const std::string& file, const std::string& format, std::optional<unsigned> degree,
                    const std::vector<std::size_t>& leaf_vars) {
  const Loaded in = load(file);
  if (in.spec.kind != fman::InputSpec::Kind::poly_manifold)
    throw fman::InputError(fman::InputError::Kind::validation, file + ": expected a poly-manifold input");
  std::vector<std::size_t> leaves = in.spec.options.leaf_vars;
  if (!leaf_vars.empty()) {
    leaves.clear();
    for (std::size_t v : leaf_vars) {
      if (v < 1 || v > in.spec.manifold().nvars())
        throw fman::InputError(fman::InputError::Kind::validation, "--leaf-vars entry out of range");
      leaves.push_back(v - 1);
    }
  }
  const std::uint32_t deg = degree ? *degree : in.spec.options.degree_bound.value_or(1);
  const fman::CoordReport r = fman::run_coord_check(in.spec.manifold(), in.spec.name, deg, leaves);
  std::cout << fman::emit_coord_report(r, pick_format(format, in.spec));
  if (!r.hm.zero) diag("error", r.name + ": Hertling-Manin tensor field does not vanish");
  return r.exit_code();
}

int cmd_catalog() {
  for (const auto& e : fman::catalog()) {
    const fman::InputSpec spec = fman::parse_input(e.json);
    std::cout << e.file << "\t" << (spec.kind == fman::InputSpec::Kind::algebra ? "algebra" : "poly-manifold")
              << "\t" << spec.description << "\n";
  }
  return fman::exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of F_man-algebras, their canonical connection and holonomy"};
  app.require_subcommand(1);
  std::string format;
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  };

  std::string file;
  std::vector<std::string> files;
  bool timings = false;
  std::optional<unsigned> degree;
  std::vector<std::size_t> leaf_vars;

  auto* verify = app.add_subcommand("verify", "Check the F_man-algebra axioms");
  verify->add_option("file", file, "Input file or bundled example")->required();
  add_format(verify);

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  analyze->add_option("files", files, "Input files or bundled examples")->required();
  analyze->add_flag("--timings", timings, "Include per-stage timings in the report");
  add_format(analyze);

  auto* dpois = app.add_subcommand("dpois", "Poisson-algebra distribution fiber");
  dpois->add_option("file", file, "Input file or bundled example")->required();
  add_format(dpois);

  auto* holonomy = app.add_subcommand("holonomy", "Curvature and holonomy algebra");
  holonomy->add_option("file", file, "Input file or bundled example")->required();
  add_format(holonomy);

  auto* coord = app.add_subcommand("coord-check", "Checks on a polynomial F-manifold");
  coord->add_option("file", file, "Input file or bundled example")->required();
  coord->add_option("--degree", degree, "Degree bound of the vector field ansatz");
  coord->add_option("--leaf-vars", leaf_vars, "Leaf variables (1-based) for the splitting check");
  add_format(coord);

  auto* cat = app.add_subcommand("catalog", "List bundled examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? fman::exit_code::ok : fman::exit_code::input_error;
  }

  try {
    if (*verify) return cmd_verify(file, format);
    if (*analyze) return cmd_analyze(files, format, timings);
    if (*dpois) return cmd_dpois(file, format);
    if (*holonomy) return cmd_holonomy(file, format);
    if (*coord) return cmd_coord_check(file, format, degree, leaf_vars);
    if (*cat) return cmd_catalog();
  } catch (const fman::InputError& e) {
    diag("error", e.what());
    return fman::exit_code::input_error;
  } catch (const fman::ReportIntegrityError& e) {
    diag("error", std::string("internal consistency check failed: ") + e.what());
    return fman::exit_code::axiom_failure;
  }
  return fman::exit_code::ok;
}
