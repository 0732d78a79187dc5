#include <benchmark/benchmark.h>

#include "lsakit/cohomology.hpp"
#include "lsakit/multivector.hpp"
#include "lsakit/phase_space.hpp"
#include "lsakit/random.hpp"

using namespace lsakit;

namespace {

/// Flat connection on R^n: zero product, identity anchor.
LSAlgebroid flat(std::size_t n) {
  std::vector<std::string> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back("x" + std::to_string(i + 1));
  std::vector<std::vector<Section>> table(n, std::vector<Section>(n, Section::zero(n, n)));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < n; ++i) anchor.push_back(VectorField::coordinate(n, i));
  return LSAlgebroid(coords, table, anchor);
}

/// Point algebra with e_1 . e_j = j e_j, an upper-triangular left-symmetric algebra.
LSAlgebroid graded_point(std::size_t r) {
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r, Section::zero(r, 0)));
  for (std::size_t j = 0; j < r; ++j) {
    table[0][j] = Rational(static_cast<long>(j)) * Section::basis(r, j, 0);
  }
  return LSAlgebroid({}, table, std::vector<VectorField>(r));
}

void BM_PolyMultiply(benchmark::State& state) {
  RandomSource rng(1);
  const Poly p = rng.poly(3, 6, 12);
  const Poly q = rng.poly(3, 6, 12);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMultiply);

void BM_CheckLeftSymmetric(benchmark::State& state) {
  const LSAlgebroid a = flat(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_left_symmetric(a).passed());
}
BENCHMARK(BM_CheckLeftSymmetric)->Arg(2)->Arg(3)->Arg(4);

void BM_PhaseSpace(benchmark::State& state) {
  const LSAlgebroid a = graded_point(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_phase_space(a).report.passed());
}
BENCHMARK(BM_PhaseSpace)->Arg(2)->Arg(3)->Arg(4);

void BM_RepDifferentialSquared(benchmark::State& state) {
  const LSAlgebroid a = flat(2);
  const Representation rep = build_left_mult_rep(a);
  RandomSource rng(3);
  const RepCochain w = rng.rep_cochain(2, 2, static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rep_d(a, rep, rep_d(a, rep, w)).is_zero());
}
BENCHMARK(BM_RepDifferentialSquared)->Arg(1)->Arg(2);

void BM_PointCohomology(benchmark::State& state) {
  const LSAlgebroid a = graded_point(static_cast<std::size_t>(state.range(0)));
  const Representation rep = build_left_mult_rep(a);
  for (auto _ : state) benchmark::DoNotOptimize(point_cohomology_dims(a, rep, 3).rows.size());
}
BENCHMARK(BM_PointCohomology)->Arg(2)->Arg(3);

void BM_GradedProperties(benchmark::State& state) {
  const LSAlgebroid a = graded_point(3);
  SampleSpec sampling;
  sampling.coeff_degree = 0;
  for (auto _ : state) benchmark::DoNotOptimize(check_graded_properties(a, sampling).passed());
}
BENCHMARK(BM_GradedProperties)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
