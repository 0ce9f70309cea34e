// Lag-order selection for a bivariate VAR fitted to first differences, on a
// common estimation sample across candidate orders.
#pragma once

#include <array>
#include <vector>

#include "ck/timeseries.hpp"

namespace ck {

struct LagSelection {
  int aic = 0, hq = 0, sic = 0, fpe = 0;  // chosen order per criterion
  int p_max = 0;
  // scores[p-1] = {AIC, HQ, SIC, FPE} for order p.
  std::vector<std::array<double, 4>> scores;
};

// Levels in, differences fitted. Orders 1..p_max with an intercept; ties go
// to the smaller order.
LagSelection var_lag_select(const TimeSeries& y, const TimeSeries& z, int p_max);

}  // namespace ck
