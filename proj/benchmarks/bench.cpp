#include <benchmark/benchmark.h>

#include "orthopack/constructions.hpp"
#include "orthopack/cube.hpp"
#include "orthopack/engine.hpp"
#include "orthopack/family.hpp"
#include "orthopack/finite_group.hpp"
#include "orthopack/fourier.hpp"
#include "orthopack/mask.hpp"
#include "orthopack/trig.hpp"

using namespace orthopack;

static void BM_SymbolicSubtract(benchmark::State& state) {
  SymbolicReal a = SymbolicReal::symbol("beta") - 3;
  SymbolicReal b = SymbolicReal::symbol("beta") - 5;
  for (auto _ : state) benchmark::DoNotOptimize(a - b);
}
BENCHMARK(BM_SymbolicSubtract);

static void BM_InZeroSet(benchmark::State& state) {
  const std::vector<Vector> pts = truncate(thin3d(), 3, 3);
  const Vector& a = pts[1];
  const Vector& b = pts[pts.size() - 2];
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal(a, b));
}
BENCHMARK(BM_InZeroSet);

static void BM_TruncateThin3d(benchmark::State& state) {
  const FamilySet fs = thin3d();
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncate(fs, w, w));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(truncate(fs, w, w).size()));
}
BENCHMARK(BM_TruncateThin3d)->Arg(3)->Arg(6);

static void BM_IsMaximalThin3d(benchmark::State& state) {
  const FamilySet fs = thin3d();
  for (auto _ : state) benchmark::DoNotOptimize(is_maximal(fs));
}
BENCHMARK(BM_IsMaximalThin3d);

static void BM_GridSearchThin3d(benchmark::State& state) {
  const FamilySet fs = thin3d();
  for (auto _ : state) benchmark::DoNotOptimize(discretized_extension_search(fs, 2, 6));
}
BENCHMARK(BM_GridSearchThin3d);

static void BM_MaskTableBuild(benchmark::State& state) {
  const CubeParams params{3, 5, 7};
  const long long n = cube_modulus(params);
  std::vector<long long> residues;
  for (const GroupElement& e : discrete_cube(params)) residues.push_back(phi(params, e));
  std::sort(residues.begin(), residues.end());
  const MaskPolynomial mask = indicator_mask(residues, n);
  for (auto _ : state) benchmark::DoNotOptimize(MaskZeroTable(mask));
}
BENCHMARK(BM_MaskTableBuild);

static void BM_ExhaustiveMaximality(benchmark::State& state) {
  const CubeParams params{3, 5, 7};
  const FiniteGroup group = cube_group(params);
  const auto l0 = lambda0(params);
  const auto zero = [&params](const GroupElement& e) { return ft_zero_set_h0(params, e); };
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_maximality(l0, zero, group));
}
BENCHMARK(BM_ExhaustiveMaximality);

static void BM_UnitCircleEnclosure(benchmark::State& state) {
  const Rational t = make_rational(355, 1130);
  for (auto _ : state) benchmark::DoNotOptimize(unit_circle(t));
}
BENCHMARK(BM_UnitCircleEnclosure);

static void BM_ClosedFormTransform(benchmark::State& state) {
  const CubeParams params{3, 5, 7};
  const Rational xi = make_rational(30001, 3);
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_ft(params, xi));
}
BENCHMARK(BM_ClosedFormTransform);

BENCHMARK_MAIN();
