// Moment-solver throughput: closed form vs RK4 across grid sizes, and the
// series solver at its default grid. Path length is the benchmark range.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ck/kinetic.hpp"
#include "ck/neumann.hpp"
#include "ck/synthetic.hpp"

namespace {

const ck::KineticParams kParams{0.28, 6.05, 0.143, 0.0};

ck::SamplePath make_path(std::size_t n) {
  const ck::TimeSeries ts = ck::synth_gbm(2000.0, 0.05, 0.2, n, ck::kTradingDt, 7);
  return ck::SamplePath::from_series(ts, ck::kTradingDt);
}

}  // namespace

static void BM_SentimentClosedForm(benchmark::State& state) {
  const ck::SamplePath X = make_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto s = ck::sentiment_closed_form(kParams, X, 2463.93, X.times());
    benchmark::DoNotOptimize(s.s.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SentimentClosedForm)->Arg(252)->Arg(1260)->Arg(5040);

static void BM_SentimentRk4(benchmark::State& state) {
  const ck::SamplePath X = make_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto s = ck::sentiment_rk4(kParams, X, 2463.93, X.times());
    benchmark::DoNotOptimize(s.s.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SentimentRk4)->Arg(252)->Arg(1260)->Arg(5040);

static void BM_VarianceSolve(benchmark::State& state) {
  const ck::SamplePath X = make_path(static_cast<std::size_t>(state.range(0)));
  const ck::SentimentPath s = ck::sentiment_closed_form(kParams, X, 2463.93, X.times());
  for (auto _ : state) {
    auto v = ck::variance_solve(kParams, s, X, 500.0, ck::VarianceVariant::corrected);
    benchmark::DoNotOptimize(v.v.data());
  }
}
BENCHMARK(BM_VarianceSolve)->Arg(1260)->Arg(5040);

static void BM_NeumannSolve(benchmark::State& state) {
  const std::size_t n = 64;  // quarter year of daily samples
  const ck::SamplePath X = make_path(n);
  const double T = X.t_back();
  double top = 0.0;
  for (double v : X.values()) top = std::max(top, v);
  const ck::GridDistribution f0 = ck::lognormal_grid(
      static_cast<std::size_t>(state.range(0)), 4.0 * top * 1.143, 2000.0, 0.1);
  for (auto _ : state) {
    auto sol = ck::neumann_solve(kParams, X, f0, T);
    benchmark::DoNotOptimize(sol.n_terms);
  }
}
BENCHMARK(BM_NeumannSolve)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
