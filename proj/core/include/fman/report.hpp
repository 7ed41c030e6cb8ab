#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fman/algebra.hpp"
#include "fman/connection.hpp"
#include "fman/coord_fman.hpp"
#include "fman/dpois.hpp"
#include "fman/holonomy.hpp"
#include "fman/io.hpp"

namespace fman {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int axiom_failure = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

/// Raised when a report would be serialized with inconsistent content.
class ReportIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0;
};

struct AnalysisReport {
  std::string name;
  std::size_t dim = 0;
  FmanVerdict axioms;

  // Everything below is filled only when the axioms pass.
  bool complete = false;
  bool poisson = false;
  std::vector<Tensor3::Entry> leibnizator;
  DpoisFiber dpois;
  ClosureVerdict dpois_closures;
  bool torsion_zero = false;
  CurvatureReport curvature_commutator;
  CurvatureReport curvature_split;
  EndoSubalgebra holonomy;
  HolonomyDiagnostics holonomy_diagnostics;
  HolonomySoundness holonomy_soundness;
  EndoSubalgebra poisson_holonomy;
  EndoSubalgebra extended_poisson_holonomy;
  InclusionVerdict inclusion;
  InclusionVerdict extended_inclusion;

  std::vector<StageTiming> timings;  // empty unless requested

  bool flat() const { return curvature_commutator.is_flat; }
  int exit_code() const { return complete ? exit_code::ok : exit_code::axiom_failure; }
};

/// Runs axioms, Leibnizator, D_Pois, connection, curvature (both formulas),
/// holonomy and the inclusion checks. Stops after the axioms if they fail.
/// Throws ReportIntegrityError if the two curvature formulas disagree.
AnalysisReport run_analysis(const AlgebraStructure& a, bool record_timings = false);

std::string emit_report(const AnalysisReport& r, ReportFormat format);

/// Verdicts of the coordinate module on a polynomial F-manifold.
struct CoordReport {
  std::string name;
  std::size_t nvars = 0;
  HmFieldVerdict hm;
  std::uint32_t degree_bound = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  AnsatzSolution ansatz;
  std::size_t rank_at_origin = 0;
  std::vector<std::size_t> leaf_vars;
  std::optional<SplittingVerdict> splitting;

  int exit_code() const { return hm.zero ? exit_code::ok : exit_code::axiom_failure; }
};

CoordReport run_coord_check(const PolyFManifold& m, std::string name, std::uint32_t degree_bound,
                            const std::vector<std::size_t>& leaf_vars);

std::string emit_coord_report(const CoordReport& r, ReportFormat format);

}  // namespace fman
