// Mean-field interaction model for a population of price expectations: each
// agent relaxes toward its own view at rate alpha and, at Poisson rate beta,
// jumps a fraction q of the way to the observed index marked up by delta.
// This header holds the parameter set, the forcing-path view, and the first
// two population moments (mean sentiment and variance) in closed form.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ck/timeseries.hpp"

namespace ck {

inline constexpr double kTradingDaysPerYear = 252.0;
inline constexpr double kTradingDt = 1.0 / kTradingDaysPerYear;

struct KineticParams {
  double q = 0.0;      // interaction strength, 0 < q < 1
  double beta = 0.0;   // interaction rate, > 0
  double delta = 0.0;  // markup on the observed index, > -1
  double alpha = 0.0;  // self-relaxation rate, >= 0

  // Only the product q*beta is identified by the mean path.
  double relaxation_rate() const noexcept { return q * beta; }
  void validate() const;  // throws InvalidParameter
};

// Parameter file: {"q":., "beta":., "delta":., "alpha":., "dt_per_observation":.}
// with alpha and dt optional (defaults 0 and 1/252). Unknown keys are ignored.
struct ParamsFile {
  KineticParams params;
  double dt_per_observation = kTradingDt;
};

ParamsFile load_params_json(const std::string& path);
void save_params_json(const ParamsFile& pf, const std::string& path);

// Post-interaction expectation: (1-q) x + q X (1+delta).
double interaction_rule(double x, double X, const KineticParams& p);

enum class PathInterp { linear, piecewise_constant };

// Continuous-time view of a sampled forcing signal X(t). Sample times must be
// strictly increasing; evaluation clamps outside [t_front, t_back].
class SamplePath {
 public:
  SamplePath(std::vector<double> times, std::vector<double> values,
             PathInterp interp = PathInterp::linear);
  // t_k = k * dt over the series values (dates only set the ordering).
  static SamplePath from_series(const TimeSeries& ts, double dt = kTradingDt,
                                PathInterp interp = PathInterp::linear);

  double operator()(double t) const;
  const std::vector<double>& times() const noexcept { return t_; }
  const std::vector<double>& values() const noexcept { return v_; }
  PathInterp interp() const noexcept { return interp_; }
  double t_front() const { return t_.front(); }
  double t_back() const { return t_.back(); }

 private:
  std::vector<double> t_, v_;
  PathInterp interp_;
};

struct SentimentPath {
  std::vector<double> t;
  std::vector<double> s;
};

// Mean sentiment s(t) = s0 e^{-q beta t}
//                     + q beta (1+delta) \int_0^t X(u) e^{q beta (u-t)} du,
// integrated exactly against the path's interpolant on each cell, so constant
// and piecewise-linear X incur no quadrature error. t_grid must start at the
// time origin 0 and increase strictly.
SentimentPath sentiment_closed_form(const KineticParams& p, const SamplePath& X,
                                    double s0, const std::vector<double>& t_grid);
// Classical RK4 on ds/dt = q beta (X(t)(1+delta) - s); cross-check path.
SentimentPath sentiment_rk4(const KineticParams& p, const SamplePath& X,
                            double s0, const std::vector<double>& t_grid);

enum class VarianceVariant {
  published,  // the rate printed in the source analysis (unstable sign on alpha)
  corrected,  // re-derived drift: contraction for every admissible parameter set
};

// dV/dt at state (v, s, x):
//   published: [2a+b(q^2-2q)] v + b(q^2-2q) s^2 + 2bq(1-2q) x(1+d) s
//              + b q^2 x^2 (1+d)^2
//   corrected: [-2a+b(q^2-2q)] v + b q^2 (s - x(1+d))^2
double variance_rhs(const KineticParams& p, double v, double s, double x,
                    VarianceVariant variant);

// Homogeneous rate gamma multiplying V, and whether it is a contraction.
struct GammaCoefficient {
  double gamma;
  bool contracting;  // gamma < 0
};
GammaCoefficient gamma_coefficient(const KineticParams& p, VarianceVariant variant);

struct VariancePath {
  std::vector<double> t;
  std::vector<double> v;
  VarianceVariant variant;
};

// Exact exponential-kernel integration of dV/dt = gamma V + F(t) with F(t)
// interpolated linearly between grid nodes; evaluated on s_path.t (which must
// match the grid X was sampled for). Keeps V >= 0 under the corrected variant.
VariancePath variance_solve(const KineticParams& p, const SentimentPath& s_path,
                            const SamplePath& X, double v0, VarianceVariant variant);
// RK4 alternative on the same grid; cross-check path.
VariancePath variance_rk4(const KineticParams& p, const SentimentPath& s_path,
                          const SamplePath& X, double v0, VarianceVariant variant);

}  // namespace ck
