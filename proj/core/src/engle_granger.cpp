#include "ck/engle_granger.hpp"

#include <algorithm>
#include <cmath>

#include "ck/errors.hpp"
#include "ck/ols.hpp"

namespace ck {

EngleGrangerResult engle_granger(const TimeSeries& y, const TimeSeries& z,
                                 SigLevel level, int max_lag, LagRule rule) {
  auto [ya, za] = align(y, z);
  const std::size_t n = ya.size();
  if (n < 20) fail(errc::series_too_short, "cointegration test needs at least 20 points");

  std::vector<std::vector<double>> cols;
  cols.emplace_back(n, 1.0);
  cols.push_back(za.values());
  const OlsFit longrun = ols(ya.values(), cols);

  // An exact linear identity between the two series leaves nothing to test:
  // the residual is zero up to rounding and any unit-root verdict on it would
  // be a verdict on floating-point noise.
  double y_scale = 0.0;
  double r_scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    y_scale = std::max(y_scale, std::abs(ya.value(i)));
    r_scale = std::max(r_scale, std::abs(longrun.residuals[i]));
  }
  if (r_scale <= 1e-12 * std::max(y_scale, 1.0))
    fail(errc::degenerate_residuals, "regression residuals are identically zero");

  TimeSeries resid(ya.dates(), longrun.residuals, "residual");
  // Residuals are mean zero by construction; the unit-root regression
  // therefore carries no deterministic terms.
  AdfResult radf = adf_test(resid, DetSpec::none, max_lag, rule);

  return EngleGrangerResult{longrun.coefficients[0],
                            longrun.coefficients[1],
                            std::move(resid),
                            radf,
                            level,
                            radf.reject_at.at(level)};
}

}  // namespace ck
