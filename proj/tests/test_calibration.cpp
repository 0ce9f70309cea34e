// Calibration: the objective's ridge structure (only k = q beta and delta are
// identified), the global/local search contract, and recovery of known
// parameters from generated consensus data.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/calibration.hpp"
#include "ck/errors.hpp"
#include "ck/synthetic.hpp"

namespace {

const ck::KineticParams kTruth{0.28, 6.05, 0.143, 0.0};

struct Fixture {
  ck::TimeSeries index;
  ck::TimeSeries consensus;
};

Fixture make_fixture(std::size_t n, double noise, std::uint64_t seed) {
  ck::TimeSeries index = ck::synth_gbm(2155.74, 0.05, 0.15, n, ck::kTradingDt, seed);
  ck::TimeSeries consensus =
      ck::synth_sentiment(kTruth, index, 2463.93, noise, seed + 1);
  return {std::move(index), std::move(consensus)};
}

}  // namespace

TEST_CASE("objective is flat along the q beta ridge", "[calibration]") {
  const Fixture fx = make_fixture(500, 0.0, 3);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);

  const double k = 1.694, delta = 0.143;
  const ck::KineticParams a{0.28, k / 0.28, delta, 0.0};
  const ck::KineticParams b{0.50, k / 0.50, delta, 0.0};
  const ck::KineticParams c{0.90, k / 0.90, delta, 0.0};
  const double fa = ck::objective(a, prob);
  const double fb = ck::objective(b, prob);
  const double fc = ck::objective(c, prob);
  CHECK(std::abs(fa - fb) < 1e-10 * std::max(1.0, fa));
  CHECK(std::abs(fa - fc) < 1e-10 * std::max(1.0, fa));
  CHECK(fa == ck::objective_kdelta(k, delta, prob));

  // The mean path never sees alpha.
  ck::KineticParams hot = a;
  hot.alpha = 3.0;
  CHECK(ck::objective(hot, prob) == fa);
}

TEST_CASE("noiseless truth is a near-zero of the objective", "[calibration]") {
  const Fixture fx = make_fixture(500, 0.0, 4);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);
  const double at_truth = ck::objective_kdelta(1.694, 0.143, prob);
  const double off = ck::objective_kdelta(2.5, 0.10, prob);
  CHECK(at_truth < 1e-6 * off);
}

TEST_CASE("global search orders candidates and honors its budget", "[calibration]") {
  const Fixture fx = make_fixture(300, 0.0, 5);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);

  const std::vector<ck::Candidate> cands = ck::global_search(prob, 64, 9);
  REQUIRE(cands.size() == 64);
  for (std::size_t i = 1; i < cands.size(); ++i)
    CHECK(cands[i - 1].objective <= cands[i].objective);
  for (const auto& cd : cands) {
    CHECK(cd.k >= prob.bounds.k_lo);
    CHECK(cd.k <= prob.bounds.k_hi);
    CHECK(cd.delta >= prob.bounds.delta_lo);
    CHECK(cd.delta <= prob.bounds.delta_hi);
  }
  // Deterministic in the seed.
  const std::vector<ck::Candidate> again = ck::global_search(prob, 64, 9);
  CHECK(again[0].k == cands[0].k);
  CHECK(again[0].objective == cands[0].objective);

  CHECK_NOTHROW(ck::global_search(prob, 1, 0));
  CHECK_THROWS_AS(ck::global_search(prob, 0, 0), ck::Error);
}

TEST_CASE("full calibration recovers noiseless truth", "[calibration]") {
  const Fixture fx = make_fixture(750, 0.0, 6);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);
  ck::CalibrationConfig cfg;
  cfg.budget = 200;
  cfg.seed = 1;
  const ck::CalibrationResult r = ck::calibrate(prob, cfg);
  CHECK(r.converged);
  CHECK(r.k == Catch::Approx(1.694).epsilon(1e-3));
  CHECK(r.delta == Catch::Approx(0.143).epsilon(1e-3));
  // The conventional split: q fixed, beta carries the product.
  CHECK(r.params.q == 0.28);
  CHECK(r.params.beta == Catch::Approx(r.k / 0.28));
  CHECK(r.n_evaluations >= cfg.budget);
}

TEST_CASE("refinement improves on its starting candidate", "[calibration]") {
  const Fixture fx = make_fixture(400, 0.002, 7);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);
  ck::Candidate start{2.0, 0.05, 0.0};
  start.objective = ck::objective_kdelta(start.k, start.delta, prob);
  const ck::CalibrationResult r = ck::local_refine(prob, start, 1e-9, 400, 0.28);
  CHECK(r.objective <= start.objective);
  CHECK(r.k == Catch::Approx(1.694).epsilon(0.05));
}

TEST_CASE("calibration json carries the decomposition and the product", "[calibration][io]") {
  const Fixture fx = make_fixture(300, 0.0, 8);
  const ck::CalibrationProblem prob =
      ck::CalibrationProblem::make(fx.index, fx.consensus);
  ck::CalibrationConfig cfg;
  cfg.budget = 50;
  const ck::CalibrationResult r = ck::calibrate(prob, cfg);

  const std::string path = "ck_test_calibration.json";
  ck::save_calibration_json(r, ck::kTradingDt, path);
  std::ifstream in(path);
  nlohmann::json doc;
  in >> doc;
  CHECK(doc["q"].get<double>() == r.params.q);
  CHECK(doc["beta"].get<double>() == r.params.beta);
  CHECK(doc["delta"].get<double>() == r.delta);
  CHECK(doc["k"].get<double>() == r.k);
  CHECK(doc["objective"].get<double>() == r.objective);
  CHECK(doc["converged"].get<bool>() == r.converged);
  CHECK(doc["dt_per_observation"].get<double>() == ck::kTradingDt);
  // The file is a loadable parameter set for the simulation commands.
  const ck::ParamsFile pf = ck::load_params_json(path);
  CHECK(pf.params.beta == r.params.beta);
  std::remove(path.c_str());
}
