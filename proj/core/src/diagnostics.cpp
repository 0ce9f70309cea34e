#include "ck/diagnostics.hpp"

#include <cmath>
#include <string>

#include "ck/errors.hpp"
#include "ck/ols.hpp"
#include "ck/stats.hpp"

namespace ck {
namespace {

// Shared LM scaffold: regress `series` on an intercept plus its own lags.
DiagnosticResult lag_lm(const std::vector<double>& series, int lags,
                        DiagnosticTest which) {
  if (lags < 1) fail(errc::invalid_parameter, "lag count must be positive");
  const std::size_t n = series.size();
  const std::size_t nl = static_cast<std::size_t>(lags);
  if (n < nl + static_cast<std::size_t>(lags) + 4)
    fail(errc::series_too_short,
         std::to_string(n) + " residuals for " + std::to_string(lags) + " lags");

  const std::size_t t_eff = n - nl;
  std::vector<double> response(series.begin() + static_cast<std::ptrdiff_t>(nl),
                               series.end());
  std::vector<std::vector<double>> cols;
  cols.emplace_back(t_eff, 1.0);
  for (std::size_t i = 1; i <= nl; ++i) {
    std::vector<double> lag(t_eff);
    for (std::size_t t = 0; t < t_eff; ++t) lag[t] = series[t + nl - i];
    cols.push_back(std::move(lag));
  }

  OlsFit fit;
  try {
    fit = ols(response, cols);
  } catch (const Error& e) {
    if (e.code() == errc::constant_series)
      fail(errc::degenerate_residuals, "residuals carry no variation");
    throw;
  }

  DiagnosticResult out;
  out.test = which;
  out.lags = lags;
  out.n_obs = t_eff;
  out.statistic = static_cast<double>(t_eff) * fit.r_squared;
  out.p_value = chi_squared_sf(out.statistic, static_cast<double>(lags));
  return out;
}

}  // namespace

DiagnosticResult breusch_godfrey(const std::vector<double>& residuals, int lags) {
  return lag_lm(residuals, lags, DiagnosticTest::serial_correlation);
}

DiagnosticResult jarque_bera(const std::vector<double>& residuals) {
  const std::size_t n = residuals.size();
  if (n < 8) fail(errc::series_too_short, "normality test needs at least 8 residuals");

  double mean = 0.0;
  for (double e : residuals) mean += e;
  mean /= static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double e : residuals) {
    const double d = e - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (!(m2 > 0.0)) fail(errc::degenerate_residuals, "residuals carry no variation");

  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  DiagnosticResult out;
  out.test = DiagnosticTest::normality;
  out.lags = 0;
  out.n_obs = n;
  out.statistic = static_cast<double>(n) / 6.0 *
                  (skew * skew + 0.25 * (kurt - 3.0) * (kurt - 3.0));
  out.p_value = chi_squared_sf(out.statistic, 2.0);
  return out;
}

DiagnosticResult arch_lm(const std::vector<double>& residuals, int lags) {
  std::vector<double> sq(residuals.size());
  for (std::size_t i = 0; i < residuals.size(); ++i) sq[i] = residuals[i] * residuals[i];
  return lag_lm(sq, lags, DiagnosticTest::arch);
}

}  // namespace ck
