// Ensemble stepping cost per particle and the draw pipeline feeding it.
#include <benchmark/benchmark.h>

#include <vector>

#include "ck/kinetic.hpp"
#include "ck/parallel.hpp"
#include "ck/particle.hpp"
#include "ck/rng.hpp"

namespace {

const ck::KineticParams kParams{0.28, 6.05, 0.143, 0.0};

std::vector<double> quarter_grid() {
  std::vector<double> t;
  const double dt = 1.0 / 2520.0;
  for (int i = 0; i <= 630; ++i) t.push_back(i * dt);
  return t;
}

}  // namespace

static void BM_PhiloxUniform(benchmark::State& state) {
  const ck::Philox rng(42);
  std::uint64_t ctr = 0;
  double acc = 0.0;
  for (auto _ : state) acc += rng.uniform(0, ctr++);
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxUniform);

static void BM_PhiloxNormal(benchmark::State& state) {
  const ck::Philox rng(42);
  std::uint64_t ctr = 0;
  double acc = 0.0;
  for (auto _ : state) acc += rng.normal(0, ctr++);
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxNormal);

static void BM_ParticleQuarterYear(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ck::SamplePath X({0.0, 0.25}, {2000.0, 2000.0});
  const ck::ParticleEnsemble init = ck::lognormal_ensemble(n, 2463.93, 0.1, 3);
  const std::vector<double> grid = quarter_grid();
  for (auto _ : state) {
    auto run = ck::particle_simulate(kParams, X, init, grid, 3);
    benchmark::DoNotOptimize(run.mean.data());
  }
  // Cost scales with particle-steps; report that rate.
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) *
                          (static_cast<std::int64_t>(grid.size()) - 1));
}
BENCHMARK(BM_ParticleQuarterYear)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_LognormalEnsemble(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto e = ck::lognormal_ensemble(n, 2463.93, 0.1, 3);
    benchmark::DoNotOptimize(e.positions.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_LognormalEnsemble)->Arg(1 << 15);

BENCHMARK_MAIN();
