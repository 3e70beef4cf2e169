#include <benchmark/benchmark.h>

#include <cmath>

#include "sasaki/conformal.hpp"
#include "sasaki/elliptic.hpp"
#include "sasaki/eta_einstein.hpp"
#include "sasaki/normal_form.hpp"
#include "sasaki/spin.hpp"

using namespace sasaki;

namespace {

SasakianStructure round_family() { return family_structure(2.0); }

void BM_MetricJets(benchmark::State& state) {
  const SasakianStructure s = round_family();
  const MetricPtr m = s.metric();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(m->components({0.2, 0.4, -0.3}, order));
}
BENCHMARK(BM_MetricJets)->Arg(1)->Arg(2)->Arg(3);

void BM_CurvatureBundle(benchmark::State& state) {
  const SasakianStructure s = round_family();
  const MetricPtr m = s.metric();
  for (auto _ : state)
    benchmark::DoNotOptimize(curvature(*m, {0.2, 0.4, -0.3}));
}
BENCHMARK(BM_CurvatureBundle);

void BM_SpinCoefficients(benchmark::State& state) {
  const SasakianStructure s = round_family();
  const MetricPtr m = s.metric();
  const Triad tr = s.adapted_triad();
  for (auto _ : state)
    benchmark::DoNotOptimize(spin_coefficients(*m, tr, {0.2, 0.4, -0.3}));
}
BENCHMARK(BM_SpinCoefficients);

void BM_RicciFromSpin(benchmark::State& state) {
  const SasakianStructure s = round_family();
  const MetricPtr m = s.metric();
  const Triad tr = s.adapted_triad();
  for (auto _ : state)
    benchmark::DoNotOptimize(ricci_from_spin(*m, tr, {0.2, 0.4, -0.3}));
}
BENCHMARK(BM_RicciFromSpin);

void BM_WeylSchouten(benchmark::State& state) {
  const SasakianStructure s = round_family();
  const MetricPtr m = s.metric();
  for (auto _ : state)
    benchmark::DoNotOptimize(weyl_schouten(*m, {0.2, 0.4, -0.3}));
}
BENCHMARK(BM_WeylSchouten);

void BM_PrescribedCurvature(benchmark::State& state) {
  const Rect r{-1.0, 1.0, -1.0, 1.0};
  const ScalarJetField R_target = field_from(
      [](const Jet2d& u, const Jet2d& v) { return sin(u) * cos(v); });
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        solve_prescribed_curvature(R_target, r, n, constant_field(0.0)));
}
BENCHMARK(BM_PrescribedCurvature)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
