#include <benchmark/benchmark.h>

#include "magspec/discretize.hpp"
#include "magspec/fibre.hpp"
#include "magspec/geometry.hpp"
#include "magspec/quasimode.hpp"
#include "magspec/specfun.hpp"

namespace {

using namespace magspec;

void BM_KummerU(benchmark::State& state) {
  const double a = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_u({a, 2.0, 0.15}));
}
BENCHMARK(BM_KummerU)->Arg(2)->Arg(1000)->Arg(100000000);

void BM_KummerM(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_m({0.4, 3.0, 20.0}));
}
BENCHMARK(BM_KummerM);

void BM_SolveBand(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fibre::solve_band(m, 0.3));
}
BENCHMARK(BM_SolveBand)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FiniteDifferenceOracle(benchmark::State& state) {
  const auto problem = discretize::exterior_fibre_spec(1, 0.3, 0.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discretize::lowest_eigenvalues(problem, 2));
}
BENCHMARK(BM_FiniteDifferenceOracle)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_TempleBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quasimode::temple_bounds(1, 0.05));
}
BENCHMARK(BM_TempleBounds)->Unit(benchmark::kMillisecond);

void BM_FindCrossing(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fibre::find_crossing(2));
}
BENCHMARK(BM_FindCrossing)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_LocalOptimality(benchmark::State& state) {
  const geometry::StarShapedDomain d(1.0, {0.0, 0.0, 0.03}, {});
  for (auto _ : state) benchmark::DoNotOptimize(geometry::local_optimality_check(d, 0.3, 5.0, 1.0));
}
BENCHMARK(BM_LocalOptimality)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
