#include "zcohom/resolution.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace zcohom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = dist(rng);
  return out;
}

// dense random input is the worst case for entry growth; coboundary matrices
// are larger but sparse with tiny entries, see the cohomology benchmarks
void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  IntMatrix a = random_matrix(rng, state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_CoboundaryAssembly(benchmark::State& state) {
  MonoidWithZero m = example_uvw();
  NaturalSystem d = trivial_Z(m);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(m, d, state.range(0)));
}
BENCHMARK(BM_CoboundaryAssembly)->Arg(1)->Arg(2)->Arg(3);

void BM_CohomologyH2(benchmark::State& state) {
  MonoidWithZero m = example_uvw();
  NaturalSystem d = trivial_Z(m);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_group(m, d, 2));
}
BENCHMARK(BM_CohomologyH2);

void BM_CohomologyH3BarCoefficients(benchmark::State& state) {
  MonoidWithZero m = example_uvw();
  NaturalSystem d = bar_system(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_group(m, d, 3));
}
BENCHMARK(BM_CohomologyH3BarCoefficients);

void BM_HomLevel(benchmark::State& state) {
  MonoidWithZero m = example_uvw();
  NaturalSystem d = trivial_Z(m);
  for (auto _ : state) benchmark::DoNotOptimize(hom_level(m, d, state.range(0)));
}
BENCHMARK(BM_HomLevel)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateZeroModules(benchmark::State& state) {
  MonoidWithZero m = example_uvw();
  auto z3 = PresentedAbelianGroup::cyclic(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_modules(m, z3));
}
BENCHMARK(BM_EnumerateZeroModules);

}  // namespace

BENCHMARK_MAIN();
