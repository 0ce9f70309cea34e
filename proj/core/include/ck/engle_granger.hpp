// Two-step residual-based cointegration test: static long-run regression of y
// on z, then a unit-root test (no deterministic terms) on the residuals.
#pragma once

#include "ck/adf.hpp"
#include "ck/timeseries.hpp"

namespace ck {

struct EngleGrangerResult {
  double longrun_intercept = 0.0;  // alpha-hat in y = a + b z + u
  double longrun_slope = 0.0;      // b-hat
  TimeSeries residual_series;
  AdfResult residual_adf;
  SigLevel level = SigLevel::pct5;
  bool cointegrated = false;
};

// Series are aligned on common dates first. Residual lag order follows the
// aic rule unless max_lag >= 0 pins it.
EngleGrangerResult engle_granger(const TimeSeries& y, const TimeSeries& z,
                                 SigLevel level = SigLevel::pct5, int max_lag = -1,
                                 LagRule rule = LagRule::aic);

}  // namespace ck
