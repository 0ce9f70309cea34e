#include "ck/adf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ck/errors.hpp"
#include "ck/ols.hpp"

namespace ck {

double CriticalValues::at(SigLevel level) const {
  switch (level) {
    case SigLevel::pct1: return pct1;
    case SigLevel::pct5: return pct5;
    case SigLevel::pct10: return pct10;
  }
  return pct5;
}

bool Rejections::at(SigLevel level) const {
  switch (level) {
    case SigLevel::pct1: return pct1;
    case SigLevel::pct5: return pct5;
    case SigLevel::pct10: return pct10;
  }
  return pct5;
}

CriticalValues adf_critical_values(DetSpec spec) {
  switch (spec) {
    case DetSpec::none: return {-2.58, -1.95, -1.62};
    case DetSpec::constant: return {-3.43, -2.86, -2.57};
    case DetSpec::trend: return {-3.96, -3.41, -3.12};
  }
  return {};
}

int default_max_lag(std::size_t n) {
  return static_cast<int>(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25));
}

namespace {

struct AdfRegression {
  double statistic = 0.0;
  double ssr = 0.0;
  std::size_t t_eff = 0;
  std::size_t n_params = 0;
};

// Regression of dy_t on y_{t-1}, p lagged differences, and deterministic
// terms, over t = start..n-1 (start >= p+1 fixes the estimation sample).
AdfRegression adf_regression(const std::vector<double>& y, DetSpec spec, int p,
                             std::size_t start) {
  const std::size_t n = y.size();
  std::vector<double> dy;
  std::vector<std::vector<double>> cols;
  const std::size_t t_eff = n - start;

  dy.reserve(t_eff);
  for (std::size_t t = start; t < n; ++t) dy.push_back(y[t] - y[t - 1]);

  cols.emplace_back();  // lagged level, the tested regressor
  cols[0].reserve(t_eff);
  for (std::size_t t = start; t < n; ++t) cols[0].push_back(y[t - 1]);

  for (int i = 1; i <= p; ++i) {
    std::vector<double> lag;
    lag.reserve(t_eff);
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t t = start; t < n; ++t) lag.push_back(y[t - li] - y[t - li - 1]);
    cols.push_back(std::move(lag));
  }
  if (spec == DetSpec::constant || spec == DetSpec::trend)
    cols.emplace_back(t_eff, 1.0);
  if (spec == DetSpec::trend) {
    std::vector<double> trend(t_eff);
    for (std::size_t i = 0; i < t_eff; ++i) trend[i] = static_cast<double>(i + 1);
    cols.push_back(std::move(trend));
  }

  const OlsFit fit = ols(dy, cols);
  return {fit.t_stats[0], fit.ssr, t_eff, fit.n_params};
}

}  // namespace

AdfResult adf_test_values(const std::vector<double>& y, DetSpec spec, int max_lag,
                          LagRule rule) {
  const std::size_t n = y.size();
  if (n < 4) fail(errc::series_too_short, "unit-root test needs at least 4 points");
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (*lo == *hi) fail(errc::constant_series, "series is constant");

  int p = 0;
  if (rule == LagRule::fixed) {
    p = max_lag < 0 ? 0 : max_lag;
  } else {
    int pmax = max_lag < 0 ? default_max_lag(n) : max_lag;
    const int det = spec == DetSpec::none ? 0 : (spec == DetSpec::constant ? 1 : 2);
    // Keep a workable common sample: t_eff >= regressors + 8.
    while (pmax > 0 &&
           static_cast<int>(n) - 1 - pmax < pmax + 1 + det + 8)
      --pmax;
    if (pmax < 0) pmax = 0;

    const std::size_t common_start = static_cast<std::size_t>(pmax) + 1;
    double best = std::numeric_limits<double>::infinity();
    for (int cand = 0; cand <= pmax; ++cand) {
      const AdfRegression reg = adf_regression(y, spec, cand, common_start);
      const double t = static_cast<double>(reg.t_eff);
      const double aic =
          std::log(std::max(reg.ssr / t, 1e-300)) + 2.0 * static_cast<double>(reg.n_params) / t;
      if (aic < best) {
        best = aic;
        p = cand;
      }
    }
  }

  const std::size_t start = static_cast<std::size_t>(p) + 1;
  if (start >= n) fail(errc::series_too_short, "lag order leaves no sample");
  const AdfRegression reg = adf_regression(y, spec, p, start);

  AdfResult out;
  out.statistic = reg.statistic;
  out.lag_order = p;
  out.spec = spec;
  out.critical_values = adf_critical_values(spec);
  out.reject_at = {reg.statistic < out.critical_values.pct1,
                   reg.statistic < out.critical_values.pct5,
                   reg.statistic < out.critical_values.pct10};
  out.n_obs_effective = reg.t_eff;
  return out;
}

AdfResult adf_test(const TimeSeries& ts, DetSpec spec, int max_lag, LagRule rule) {
  return adf_test_values(ts.values(), spec, max_lag, rule);
}

}  // namespace ck
