#include <benchmark/benchmark.h>

#include <cmath>

#include "nlsdbar/model_rhp.hpp"
#include "nlsdbar/pde.hpp"
#include "nlsdbar/phase.hpp"
#include "nlsdbar/scattering.hpp"
#include "nlsdbar/special.hpp"

using namespace nlsdbar;

namespace {

const ReflectionCoefficient& sech_r() {
  static const ReflectionCoefficient r =
      reflection_grid(sample_potential(Potential::sech(0.8), 0.005), default_z_grid());
  return r;
}

// Series region and asymptotic region of D_a.
void BM_pcf_D(benchmark::State& st) {
  const cplx a(0.0, 0.3);
  const cplx zeta = std::polar(static_cast<double>(st.range(0)), 0.7);
  for (auto _ : st) benchmark::DoNotOptimize(pcf_D(a, zeta));
}
BENCHMARK(BM_pcf_D)->Arg(1)->Arg(6)->Arg(20);

void BM_model_P(benchmark::State& st) {
  const ModelParams p = ModelParams::make(std::polar(0.5, pi / 3));
  for (auto _ : st) benchmark::DoNotOptimize(model_P(cplx(1.3, 0.4), p));
}
BENCHMARK(BM_model_P);

void BM_jost_scatter(benchmark::State& st) {
  const SampledField q = sample_potential(Potential::sech(0.8), 1.0 / static_cast<double>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(jost_scatter(q, 0.37));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(q.values.size()));
}
BENCHMARK(BM_jost_scatter)->Arg(50)->Arg(200);

void BM_beta(benchmark::State& st) {
  const auto& r = sech_r();
  for (auto _ : st) benchmark::DoNotOptimize(beta(cplx(0.2, 0.1), 0.0, r));
}
BENCHMARK(BM_beta);

void BM_split_step(benchmark::State& st) {
  EvolutionConfig c;
  c.grid = Grid1D::periodic(200.0, static_cast<std::size_t>(st.range(0)));
  c.dt = 0.5 * c.stability_limit();
  c.t_final = 100 * c.dt;
  const SampledField q0 = SampledField::sample(c.grid, [](double x) { return cplx(0.8 / std::cosh(x)); });
  for (auto _ : st) benchmark::DoNotOptimize(split_step_evolve(q0, c));
  st.SetItemsProcessed(st.iterations() * 100);  // steps
}
BENCHMARK(BM_split_step)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
