// Error-correction form of the bivariate system: each difference equation
// regresses on its own lags, the other variable's lags, and the lagged
// disequilibrium term, with the constant restricted to that term.
#pragma once

#include <array>
#include <memory>
#include <vector>

#include "ck/johansen.hpp"
#include "ck/timeseries.hpp"

namespace ck {

struct VecmEquation {
  double loading = 0.0;  // coefficient on the lagged disequilibrium
  double loading_se = 0.0;
  double loading_t = 0.0;
  std::vector<double> own_coef, own_se, own_t;      // own lagged differences
  std::vector<double> cross_coef, cross_se, cross_t;  // other series' lags
  std::vector<double> residuals;
  double r_squared = 0.0;
};

struct VecmDesign;  // estimation-sample matrices kept for block tests

struct VecmFit {
  int lag_order = 0;
  int rank = 1;  // requested; the embedded Johansen result carries its own pick
  double longrun_slope = 0.0;
  double longrun_intercept = 0.0;
  VecmEquation eq_y, eq_z;
  std::size_t n_obs_effective = 0;
  JohansenResult johansen;
  std::shared_ptr<const VecmDesign> design;
};

// rank must be 1 or 2; the long-run relation is always the leading Johansen
// vector, and a requested rank that disagrees with the trace decision is
// visible through fit.johansen.selected_rank.
VecmFit vecm_fit(const TimeSeries& y, const TimeSeries& z, int p, int rank = 1);

// Equivalent levels VAR of order p+1: x_t = c + sum A_i x_{t-i} + e_t.
struct LevelVar {
  int order = 0;
  std::vector<std::array<std::array<double, 2>, 2>> coef;  // coef[i][row][col]
  std::array<double, 2> intercept{};
};
LevelVar vecm_to_var(const VecmFit& fit);

enum class VecmEq { y_eq, z_eq };
enum class LagBlock { own, cross };

struct BlockTest {
  double statistic = 0.0;  // F
  double p_value = 1.0;
  int df1 = 0;
  std::size_t df2 = 0;
};

// Joint zero restriction on one lag block of one equation (F test on the
// estimation sample stored in the fit).
BlockTest granger_block_test(const VecmFit& fit, VecmEq equation, LagBlock block);

// Periods until half a disequilibrium decays: log(1/2) / log(1 + gamma),
// defined for gamma in (-1, 0).
double half_life(double gamma);

}  // namespace ck
