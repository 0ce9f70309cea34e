// Econometrics hot paths: the unit-root test with automatic lag choice (the
// pipeline's inner loop), the two-step cointegration test, and the VECM fit.
#include <benchmark/benchmark.h>

#include "ck/adf.hpp"
#include "ck/engle_granger.hpp"
#include "ck/johansen.hpp"
#include "ck/synthetic.hpp"
#include "ck/vecm.hpp"

namespace {

ck::CointegratedPair make_pair(std::size_t n) {
  return ck::synth_cointegrated_pair(1.0, 0.2, 0.5, 1.0, 1.0, n, 11);
}

}  // namespace

static void BM_AdfAicLags(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ck::TimeSeries walk = ck::synth_gbm(100.0, 0.0, 0.2, n, 1.0 / 252.0, 5);
  const ck::TimeSeries levels = ck::log_series(walk);
  for (auto _ : state) {
    auto r = ck::adf_test(levels, ck::DetSpec::constant);
    benchmark::DoNotOptimize(r.statistic);
  }
}
BENCHMARK(BM_AdfAicLags)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_AdfFixedLag(benchmark::State& state) {
  const ck::TimeSeries walk = ck::synth_gbm(100.0, 0.0, 0.2, 2000, 1.0 / 252.0, 5);
  for (auto _ : state) {
    auto r = ck::adf_test(walk, ck::DetSpec::none, 4, ck::LagRule::fixed);
    benchmark::DoNotOptimize(r.statistic);
  }
}
BENCHMARK(BM_AdfFixedLag);

static void BM_EngleGranger(benchmark::State& state) {
  const ck::CointegratedPair pair = make_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = ck::engle_granger(pair.y, pair.z);
    benchmark::DoNotOptimize(r.cointegrated);
  }
}
BENCHMARK(BM_EngleGranger)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Johansen(benchmark::State& state) {
  const ck::CointegratedPair pair = make_pair(1000);
  for (auto _ : state) {
    auto r = ck::johansen(pair.y, pair.z, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(r.trace_r0);
  }
}
BENCHMARK(BM_Johansen)->Arg(2)->Arg(9);

static void BM_VecmFit(benchmark::State& state) {
  const ck::CointegratedPair pair = make_pair(1000);
  for (auto _ : state) {
    auto fit = ck::vecm_fit(pair.y, pair.z, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(fit.eq_y.loading);
  }
}
BENCHMARK(BM_VecmFit)->Arg(2)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
