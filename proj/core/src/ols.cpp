#include "ck/ols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "ck/errors.hpp"

namespace ck {

OlsFit ols(const std::vector<double>& y,
           const std::vector<std::vector<double>>& regressors) {
  const std::size_t n = y.size();
  const std::size_t k = regressors.size();
  if (k == 0) fail(errc::invalid_parameter, "no regressors");
  for (const auto& col : regressors)
    if (col.size() != n) fail(errc::invalid_parameter, "regressor length mismatch");
  if (n <= k)
    fail(errc::too_few_observations,
         std::to_string(n) + " observations for " + std::to_string(k) + " parameters");

  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd yv(n);
  bool has_intercept = false;
  for (std::size_t j = 0; j < k; ++j) {
    double lo = regressors[j][0], hi = lo;
    for (std::size_t i = 0; i < n; ++i) {
      X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = regressors[j][i];
      lo = std::min(lo, regressors[j][i]);
      hi = std::max(hi, regressors[j][i]);
    }
    if (lo == hi && lo != 0.0) has_intercept = true;
  }
  for (std::size_t i = 0; i < n; ++i) yv(static_cast<Eigen::Index>(i)) = y[i];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < static_cast<Eigen::Index>(k))
    fail(errc::rank_deficient, "regressor matrix has rank " +
                                   std::to_string(qr.rank()) + " < " + std::to_string(k));
  const Eigen::VectorXd beta = qr.solve(yv);
  const Eigen::VectorXd resid = yv - X * beta;
  const double ssr = resid.squaredNorm();

  // Total variation: around the mean when an intercept is present, raw
  // otherwise, so r_squared stays in [0,1] either way.
  double tss = 0.0;
  if (has_intercept) {
    const double mean = yv.mean();
    tss = (yv.array() - mean).square().sum();
  } else {
    tss = yv.squaredNorm();
  }
  if (tss <= 0.0) fail(errc::constant_series, "response has no variation");

  const double sigma2 = ssr / static_cast<double>(n - k);
  const Eigen::MatrixXd xtx_inv =
      (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(
          static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));

  OlsFit fit;
  fit.n_obs = n;
  fit.n_params = k;
  fit.ssr = ssr;
  fit.r_squared = 1.0 - ssr / tss;
  fit.coefficients.resize(k);
  fit.std_errors.resize(k);
  fit.t_stats.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    fit.coefficients[j] = beta(jj);
    fit.std_errors[j] = std::sqrt(std::max(0.0, sigma2 * xtx_inv(jj, jj)));
    fit.t_stats[j] = fit.std_errors[j] > 0.0 ? beta(jj) / fit.std_errors[j]
                                             : std::numeric_limits<double>::infinity();
  }
  fit.residuals.assign(resid.data(), resid.data() + resid.size());
  return fit;
}

}  // namespace ck
