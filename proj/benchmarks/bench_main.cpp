#include <benchmark/benchmark.h>

#include "vortexlab/analysis.hpp"
#include "vortexlab/electron_field.hpp"
#include "vortexlab/gw_field.hpp"
#include "vortexlab/photon_field.hpp"
#include "vortexlab/presets.hpp"

using namespace vortexlab;

static void BM_TaylorMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const Taylor a = exp(Taylor::variable(Axis::r, 0.3, order) * Taylor::variable(Axis::t, 0.1, order));
  const Taylor b = sin(Taylor::variable(Axis::phi, 1.2, order) + Taylor::variable(Axis::z, -0.4, order));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TaylorMultiply)->Arg(1)->Arg(2)->Arg(4);

static void BM_PhotonChiJet(benchmark::State& state) {
  const PotentialExpr chi = make_potential(find_preset("fig1b").config);
  const int order = static_cast<int>(state.range(0));
  const SpacetimePoint p{0.0, 20.0, 0.3, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(chi.expand(p, order));
}
BENCHMARK(BM_PhotonChiJet)->Arg(2)->Arg(4);

static void BM_Intensity(benchmark::State& state, const char* preset) {
  const FieldConfig cfg = find_preset(preset).config;
  const IntensityFn I = make_intensity(cfg);
  const double r = cfg.waist_hint() * 2.7;
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(I(r, phi));
    phi += 1e-3;
  }
}
BENCHMARK_CAPTURE(BM_Intensity, photon, "fig1b");
BENCHMARK_CAPTURE(BM_Intensity, electron, "fig2b");
BENCHMARK_CAPTURE(BM_Intensity, gw, "fig3b");

static void BM_AnalyzeRing(benchmark::State& state) {
  const FieldConfig cfg = find_preset("fig2b").config;
  const IntensityFn I = make_intensity(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_ring(I, cfg.ell(), cfg.waist_hint()));
}
BENCHMARK(BM_AnalyzeRing)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
