// Ordinary least squares on explicit regressor columns. Every estimator in
// the cointegration pipeline funnels through here so rank handling, standard
// errors, and R^2 conventions stay consistent.
#pragma once

#include <cstddef>
#include <vector>

namespace ck {

struct OlsFit {
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<double> t_stats;
  std::vector<double> residuals;
  double r_squared = 0.0;  // uncentered when no intercept column is present
  double ssr = 0.0;
  std::size_t n_obs = 0;
  std::size_t n_params = 0;
};

// regressors[j] is the j-th column; all columns must match y in length.
// Throws RankDeficient, TooFewObservations, ConstantSeries (zero total
// variation in y).
OlsFit ols(const std::vector<double>& y,
           const std::vector<std::vector<double>>& regressors);

}  // namespace ck
