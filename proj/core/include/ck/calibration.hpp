// Fits the interaction model to an observed consensus series. Only the
// product k = q * beta and the markup delta are identified by the mean path,
// so the search runs over (k, delta) and a conventional q splits k afterward.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ck/kinetic.hpp"
#include "ck/timeseries.hpp"

namespace ck {

struct ParamBounds {
  double k_lo = 0.01, k_hi = 20.0;
  double delta_lo = -0.5, delta_hi = 1.0;
};

struct CalibrationProblem {
  TimeSeries index;      // forcing X, aligned with consensus
  TimeSeries consensus;  // measured target series
  double s0 = 0.0;       // initial sentiment (default: first consensus value)
  double dt = kTradingDt;
  ParamBounds bounds;

  static CalibrationProblem make(const TimeSeries& index, const TimeSeries& consensus,
                                 std::optional<double> s0 = std::nullopt,
                                 double dt = kTradingDt, ParamBounds bounds = {});
};

// Euclidean distance between the closed-form mean path and the consensus.
double objective(const KineticParams& p, const CalibrationProblem& prob);
double objective_kdelta(double k, double delta, const CalibrationProblem& prob);

struct Candidate {
  double k = 0.0, delta = 0.0;
  double objective = 0.0;
};

// Latin hypercube over the bounds (log-spaced in k), sorted ascending by
// objective with deterministic tie-breaks. budget >= 1.
std::vector<Candidate> global_search(const CalibrationProblem& prob,
                                     std::size_t budget, std::uint64_t seed);

struct CalibrationResult {
  KineticParams params;  // q = q_fixed, beta = k / q_fixed
  double k = 0.0;
  double delta = 0.0;
  double objective = 0.0;
  std::size_t n_evaluations = 0;
  std::size_t restarts_used = 0;
  bool converged = false;
};

// Nelder-Mead refinement from one candidate, clamped to the bounds.
CalibrationResult local_refine(const CalibrationProblem& prob, Candidate start,
                               double tol, int max_iter, double q_fixed);

struct CalibrationConfig {
  std::size_t budget = 500;  // global-search evaluations, >= 1
  std::size_t n_refine = 5;  // local refinements from the best candidates
  double tol = 1e-9;
  int max_iter = 400;
  double q_fixed = 0.28;
  std::uint64_t seed = 0;
};

CalibrationResult calibrate(const CalibrationProblem& prob,
                            const CalibrationConfig& cfg = {});

// {"q","beta","delta","alpha","k","objective","dt_per_observation",...}
void save_calibration_json(const CalibrationResult& result, double dt,
                           const std::string& path);

}  // namespace ck
