#include <benchmark/benchmark.h>

#include <vector>

#include "chipnoise/geometry.hpp"
#include "chipnoise/lifetime.hpp"
#include "chipnoise/material_db.hpp"
#include "chipnoise/materials.hpp"
#include "chipnoise/screening.hpp"

using namespace chipnoise;

static void BM_BlochGruneisen(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bloch_gruneisen(t, 343.0, 8.0));
}
BENCHMARK(BM_BlochGruneisen)->Arg(4)->Arg(77)->Arg(300);

static void BM_SkinDepth(benchmark::State& state) {
  double rho = 0.017;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho);
    benchmark::DoNotOptimize(skin_depth(rho, 0.79));
  }
}
BENCHMARK(BM_SkinDepth);

static void BM_YSlab(benchmark::State& state) {
  const auto g = SlabGeometry::make(10.0, 2.15);
  for (auto _ : state) benchmark::DoNotOptimize(y_slab(g, {3.0, 1.0}));
}
BENCHMARK(BM_YSlab);

static void BM_YNumeric(benchmark::State& state) {
  const std::vector<Box> boxes{slab_box(SlabGeometry::make(10.0, 2.15))};
  NumericOptions opts;
  opts.tolerance = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(y_numeric(boxes, {3.0, 0.0, 1.0}, opts));
}
BENCHMARK(BM_YNumeric)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_EffectiveLifetime(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(effective_lifetime(0.25));
}
BENCHMARK(BM_EffectiveLifetime);

static void BM_LifetimeCurve(benchmark::State& state) {
  std::vector<double> heights;
  for (int h = 1; h <= 100; ++h) heights.push_back(h);
  const auto g = SlabGeometry::make(10.0, 2.15);
  TrapSpec trap;
  trap.field = BiasFieldGauss{0.57};
  for (auto _ : state) benchmark::DoNotOptimize(lifetime_curve({400.0, 2.64}, g, trap, heights));
}
BENCHMARK(BM_LifetimeCurve)->Unit(benchmark::kMicrosecond);

static void BM_ScreenMetals(benchmark::State& state) {
  const auto& db = MaterialDatabase::bundled();
  for (auto _ : state) benchmark::DoNotOptimize(screen_metals(db, 77.0, 100.0));
}
BENCHMARK(BM_ScreenMetals)->Unit(benchmark::kMicrosecond);

static void BM_PeakTemperature(benchmark::State& state) {
  const Conductor cu = MaterialDatabase::bundled().metal("Cu");
  for (auto _ : state) benchmark::DoNotOptimize(peak_temperature(cu));
}
BENCHMARK(BM_PeakTemperature)->Unit(benchmark::kMicrosecond);

static void BM_Crossover(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(crossover_distance({4.2, 0.017}, {4.2, 2.21}, 0.79));
}
BENCHMARK(BM_Crossover)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
