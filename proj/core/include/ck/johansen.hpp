// Johansen trace test for a bivariate system, restricted-constant variant:
// the constant lives inside the cointegrating relation, so the levels carry
// no linear trend under the null.
#pragma once

#include <array>
#include <cstddef>

#include "ck/adf.hpp"
#include "ck/timeseries.hpp"

namespace ck {

struct JohansenResult {
  std::array<double, 2> eigenvalues{};  // two largest, descending, in [0,1)
  double trace_r0 = 0.0;                // H0: rank 0
  double trace_r1 = 0.0;                // H0: rank <= 1
  CriticalValues crit_r0, crit_r1;
  int selected_rank = 0;                // sequential testing at `level`
  SigLevel level = SigLevel::pct5;
  // Leading cointegrating vector normalized on y: ect = y - slope z - intercept.
  double longrun_slope = 0.0;
  double longrun_intercept = 0.0;
  // Adjustment speeds of (dy, dz) toward the leading relation.
  double loading_y = 0.0;
  double loading_z = 0.0;
  int lag_order = 0;  // lagged differences in the auxiliary regressions
  std::size_t n_obs_effective = 0;
};

// p = number of lagged difference terms (>= 0).
JohansenResult johansen(const TimeSeries& y, const TimeSeries& z, int p,
                        SigLevel level = SigLevel::pct5);

}  // namespace ck
