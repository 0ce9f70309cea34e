// Seeded synthetic data for tests, size/power studies, and the demo pipeline.
// All draws are counter-addressed, so a (generator, seed) pair fully pins the
// output on every platform.
#pragma once

#include <cstdint>

#include "ck/kinetic.hpp"
#include "ck/timeseries.hpp"

namespace ck {

// n consecutive Mon..Fri dates starting at `start` (itself shifted off a
// weekend if needed).
std::vector<Date> weekday_dates(Date start, std::size_t n);

// Geometric Brownian motion sampled at step dt, dated on a weekday calendar.
TimeSeries synth_gbm(double x0, double mu, double sigma, std::size_t n,
                     double dt, std::uint64_t seed);

struct CointegratedPair {
  TimeSeries y;  // slope * z + intercept + AR(1) disturbance
  TimeSeries z;  // pure random walk
};

// y and z share a stochastic trend; the disturbance u_t = rho u_{t-1} + eps
// starts from its stationary law, so the pair is cointegrated for |rho| < 1.
CointegratedPair synth_cointegrated_pair(double slope, double intercept,
                                         double rho, double sigma_u,
                                         double sigma_z, std::size_t n,
                                         std::uint64_t seed);

// Mean sentiment driven by the index series plus iid observation noise;
// shares the index dates.
TimeSeries synth_sentiment(const KineticParams& p, const TimeSeries& index,
                           double s0, double noise_sigma, std::uint64_t seed,
                           double dt = kTradingDt);

}  // namespace ck
