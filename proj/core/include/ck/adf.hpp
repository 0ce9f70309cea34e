// Augmented Dickey-Fuller unit-root test: t-ratio on the lagged level in a
// regression of the first difference, compared against left-tail asymptotic
// critical values for the chosen deterministic specification.
#pragma once

#include <cstddef>

#include "ck/timeseries.hpp"

namespace ck {

enum class DetSpec { none, constant, trend };
enum class LagRule { fixed, aic };
enum class SigLevel { pct1, pct5, pct10 };

struct CriticalValues {
  double pct1 = 0.0, pct5 = 0.0, pct10 = 0.0;
  double at(SigLevel level) const;
};

struct Rejections {
  bool pct1 = false, pct5 = false, pct10 = false;
  bool at(SigLevel level) const;
};

CriticalValues adf_critical_values(DetSpec spec);

struct AdfResult {
  double statistic = 0.0;
  int lag_order = 0;  // augmentation lags actually used
  DetSpec spec = DetSpec::none;
  CriticalValues critical_values;
  Rejections reject_at;
  std::size_t n_obs_effective = 0;
};

// Upper lag bound floor(12 (n/100)^{1/4}).
int default_max_lag(std::size_t n);

// rule == aic: lags chosen by AIC over 0..max_lag on a common sample, then the
// test is re-estimated at the chosen order on the longest sample it allows.
// rule == fixed: exactly max_lag augmentation lags. max_lag < 0 means the
// default bound under aic (and 0 under fixed).
AdfResult adf_test(const TimeSeries& ts, DetSpec spec = DetSpec::none,
                   int max_lag = -1, LagRule rule = LagRule::aic);
AdfResult adf_test_values(const std::vector<double>& y, DetSpec spec = DetSpec::none,
                          int max_lag = -1, LagRule rule = LagRule::aic);

}  // namespace ck
