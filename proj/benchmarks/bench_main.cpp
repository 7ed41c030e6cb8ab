#include <map>
#include <string>

#include <benchmark/benchmark.h>

#include "fman/catalog.hpp"
#include "fman/connection.hpp"
#include "fman/coord_fman.hpp"
#include "fman/holonomy.hpp"
#include "fman/io.hpp"
#include "fman/matrix.hpp"
#include "fman/report.hpp"

namespace {

using namespace fman;

const InputSpec& bundled(const char* name) {
  static std::map<std::string, InputSpec> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, parse_input(find_in_catalog(name)->json)).first;
  return it->second;
}

// Deterministic dense matrix with small rational entries.
Matrix test_matrix(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(static_cast<long>((r * 7 + c * 3) % 11) - 5, (r + c) % 3 + 1);
  return m;
}

void BM_Rref(benchmark::State& state) {
  const Matrix m = test_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(9)->Arg(16);

void BM_HolonomyD1(benchmark::State& state) {
  const AlgebraStructure& a = bundled("n31_2_D1").algebra();
  const CurvatureReport r = curvature_commutator(a);
  for (auto _ : state) benchmark::DoNotOptimize(holonomy_algebra(a, r));
}
BENCHMARK(BM_HolonomyD1);

void BM_AnalyzeD1(benchmark::State& state) {
  const AlgebraStructure& a = bundled("n31_2_D1").algebra();
  for (auto _ : state) benchmark::DoNotOptimize(run_analysis(a));
}
BENCHMARK(BM_AnalyzeD1);

void BM_LieDerivative(benchmark::State& state) {
  const PolyFManifold& m = bundled("poly_split_block").manifold();
  PolyVectorField x = PolyVectorField::zero(2);
  x[0] = Polynomial::variable(2, 1) * Polynomial::variable(2, 1);
  x[1] = Polynomial::variable(2, 0) + Polynomial::constant(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lie_derivative_S(m, x));
}
BENCHMARK(BM_LieDerivative);

void BM_Ansatz(benchmark::State& state) {
  const PolyFManifold& m = bundled("poly_split_block").manifold();
  for (auto _ : state) benchmark::DoNotOptimize(solve_dpois_ansatz(m, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_Ansatz)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
