// Residual diagnostics: serial correlation (LM), normality, and conditional
// heteroskedasticity, each reduced to a chi-squared tail probability.
#pragma once

#include <cstddef>
#include <vector>

namespace ck {

enum class DiagnosticTest { serial_correlation, normality, arch };

struct DiagnosticResult {
  DiagnosticTest test = DiagnosticTest::normality;
  double statistic = 0.0;
  double p_value = 1.0;
  int lags = 0;
  std::size_t n_obs = 0;
};

// LM regression of e_t on an intercept and its own `lags` lags, dropping the
// first `lags` observations; statistic T R^2 ~ chi2(lags).
DiagnosticResult breusch_godfrey(const std::vector<double>& residuals, int lags);

// n/6 (S^2 + (K-3)^2/4) from population skewness and kurtosis, chi2(2).
DiagnosticResult jarque_bera(const std::vector<double>& residuals);

// LM regression of e_t^2 on an intercept and its own `lags` lags, T R^2,
// chi2(lags).
DiagnosticResult arch_lm(const std::vector<double>& residuals, int lags);

}  // namespace ck
