#include "ck/var_select.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "ck/errors.hpp"

namespace ck {

LagSelection var_lag_select(const TimeSeries& y, const TimeSeries& z, int p_max) {
  if (p_max < 1) fail(errc::invalid_parameter, "p_max must be at least 1");
  auto [ya, za] = align(y, z);
  const TimeSeries dy = diff_series(ya), dz = diff_series(za);

  constexpr int kDim = 2;
  const int nd = static_cast<int>(dy.size());
  const int t_eff = nd - p_max;
  // Enough sample to fit the largest model with headroom.
  if (t_eff < kDim * p_max + 1 + 8)
    fail(errc::too_few_observations,
         "effective sample " + std::to_string(t_eff) + " too small for p_max " +
             std::to_string(p_max));

  Eigen::MatrixXd lhs(t_eff, kDim);
  for (int t = 0; t < t_eff; ++t) {
    lhs(t, 0) = dy.value(static_cast<std::size_t>(t + p_max));
    lhs(t, 1) = dz.value(static_cast<std::size_t>(t + p_max));
  }

  LagSelection out;
  out.p_max = p_max;
  std::array<double, 4> best{};
  best.fill(std::numeric_limits<double>::infinity());

  for (int p = 1; p <= p_max; ++p) {
    const int k = kDim * p + 1;
    Eigen::MatrixXd X(t_eff, k);
    for (int t = 0; t < t_eff; ++t) {
      int c = 0;
      for (int i = 1; i <= p; ++i) {
        X(t, c++) = dy.value(static_cast<std::size_t>(t + p_max - i));
        X(t, c++) = dz.value(static_cast<std::size_t>(t + p_max - i));
      }
      X(t, c) = 1.0;
    }
    const Eigen::MatrixXd beta =
        (X.transpose() * X).ldlt().solve(X.transpose() * lhs);
    const Eigen::MatrixXd u = lhs - X * beta;
    const Eigen::Matrix2d sigma = u.transpose() * u / static_cast<double>(t_eff);
    const double det = sigma.determinant();
    if (!(det > 0.0))
      fail(errc::degenerate_residuals, "singular residual covariance at p=" +
                                           std::to_string(p));
    const double ldet = std::log(det);
    const double tt = static_cast<double>(t_eff);
    const double pk2 = static_cast<double>(p * kDim * kDim);
    const double m = static_cast<double>(k);  // regressors per equation

    const double aic = ldet + 2.0 * pk2 / tt;
    const double hq = ldet + 2.0 * std::log(std::log(tt)) * pk2 / tt;
    const double sic = ldet + std::log(tt) * pk2 / tt;
    const double fpe = std::pow((tt + m) / (tt - m), kDim) * det;

    out.scores.push_back({aic, hq, sic, fpe});
    if (aic < best[0]) { best[0] = aic; out.aic = p; }
    if (hq < best[1]) { best[1] = hq; out.hq = p; }
    if (sic < best[2]) { best[2] = sic; out.sic = p; }
    if (fpe < best[3]) { best[3] = fpe; out.fpe = p; }
  }
  return out;
}

}  // namespace ck
