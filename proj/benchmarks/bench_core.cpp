#include <benchmark/benchmark.h>

#include "cpbih/biharmonic.hpp"
#include "cpbih/catalog.hpp"
#include "cpbih/curves.hpp"
#include "cpbih/simons.hpp"

using namespace cpbih;

static void BM_FundamentalData(benchmark::State& state) {
  const Chart c = torus_cp2(Branch::Plus);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_data(c, 0.3, 0.7));
}
BENCHMARK(BM_FundamentalData);

static void BM_Bitension(benchmark::State& state) {
  const Chart c = torus_cp2(Branch::Minus);
  for (auto _ : state) benchmark::DoNotOptimize(bitension_residual(c, 0.3, 0.7));
}
BENCHMARK(BM_Bitension);

static void BM_SimonsResidual(benchmark::State& state) {
  const Chart c = torus_cp2(Branch::Plus);
  for (auto _ : state) benchmark::DoNotOptimize(simons_residual(c, 0.3, 0.7));
}
BENCHMARK(BM_SimonsResidual);

static void BM_IntegrateFrenet(benchmark::State& state) {
  const auto [g1, g2] = gamma_specs(6.0);
  const FrenetFrame f = initial_frame(g1);
  const double length = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_frenet(g1, f, length, 1e-3));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(length * 1000));
}
BENCHMARK(BM_IntegrateFrenet)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_CaseIIISurface(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(case_iii_surface(3.0));
}
BENCHMARK(BM_CaseIIISurface)->Unit(benchmark::kMillisecond);

static void BM_SolveCaseII(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_case_ii(3.0));
}
BENCHMARK(BM_SolveCaseII);

BENCHMARK_MAIN();
