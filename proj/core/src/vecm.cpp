#include "ck/vecm.hpp"

#include <cmath>
#include <string>

#include "ck/errors.hpp"
#include "ck/ols.hpp"
#include "ck/stats.hpp"

namespace ck {

// Columns shared by both equations over the estimation sample.
struct VecmDesign {
  std::vector<double> dy, dz;                    // responses
  std::vector<std::vector<double>> dy_lags, dz_lags;
  std::vector<double> ect;                       // lagged disequilibrium
  int p = 0;
};

namespace {

OlsFit fit_equation(const std::vector<double>& response,
                    const std::vector<std::vector<double>>& own,
                    const std::vector<std::vector<double>>& cross,
                    const std::vector<double>& ect) {
  std::vector<std::vector<double>> cols;
  cols.reserve(own.size() + cross.size() + 1);
  for (const auto& c : own) cols.push_back(c);
  for (const auto& c : cross) cols.push_back(c);
  cols.push_back(ect);
  return ols(response, cols);
}

VecmEquation pack_equation(const OlsFit& fit, int p) {
  VecmEquation eq;
  const std::size_t np = static_cast<std::size_t>(p);
  eq.own_coef.assign(fit.coefficients.begin(), fit.coefficients.begin() + np);
  eq.own_se.assign(fit.std_errors.begin(), fit.std_errors.begin() + np);
  eq.own_t.assign(fit.t_stats.begin(), fit.t_stats.begin() + np);
  eq.cross_coef.assign(fit.coefficients.begin() + np, fit.coefficients.begin() + 2 * np);
  eq.cross_se.assign(fit.std_errors.begin() + np, fit.std_errors.begin() + 2 * np);
  eq.cross_t.assign(fit.t_stats.begin() + np, fit.t_stats.begin() + 2 * np);
  eq.loading = fit.coefficients[2 * np];
  eq.loading_se = fit.std_errors[2 * np];
  eq.loading_t = fit.t_stats[2 * np];
  eq.residuals = fit.residuals;
  eq.r_squared = fit.r_squared;
  return eq;
}

}  // namespace

VecmFit vecm_fit(const TimeSeries& y, const TimeSeries& z, int p, int rank) {
  if (p < 1) fail(errc::invalid_parameter, "error-correction fit needs p >= 1");
  if (rank != 1 && rank != 2)
    fail(errc::invalid_parameter, "rank must be 1 or 2, got " + std::to_string(rank));

  auto [ya, za] = align(y, z);
  JohansenResult jo = johansen(ya, za, p);

  const int n = static_cast<int>(ya.size());
  const int t_eff = n - 1 - p;

  auto design = std::make_shared<VecmDesign>();
  design->p = p;
  design->dy.resize(t_eff);
  design->dz.resize(t_eff);
  design->ect.resize(t_eff);
  design->dy_lags.assign(static_cast<std::size_t>(p), std::vector<double>(t_eff));
  design->dz_lags.assign(static_cast<std::size_t>(p), std::vector<double>(t_eff));

  auto yv = [&](int i) { return ya.value(static_cast<std::size_t>(i)); };
  auto zv = [&](int i) { return za.value(static_cast<std::size_t>(i)); };
  for (int r = 0; r < t_eff; ++r) {
    const int t = r + p + 1;
    design->dy[r] = yv(t) - yv(t - 1);
    design->dz[r] = zv(t) - zv(t - 1);
    design->ect[r] =
        yv(t - 1) - jo.longrun_slope * zv(t - 1) - jo.longrun_intercept;
    for (int i = 1; i <= p; ++i) {
      design->dy_lags[static_cast<std::size_t>(i - 1)][r] = yv(t - i) - yv(t - i - 1);
      design->dz_lags[static_cast<std::size_t>(i - 1)][r] = zv(t - i) - zv(t - i - 1);
    }
  }

  const OlsFit fy = fit_equation(design->dy, design->dy_lags, design->dz_lags, design->ect);
  const OlsFit fz = fit_equation(design->dz, design->dz_lags, design->dy_lags, design->ect);

  VecmFit out;
  out.lag_order = p;
  out.rank = rank;
  out.longrun_slope = jo.longrun_slope;
  out.longrun_intercept = jo.longrun_intercept;
  out.eq_y = pack_equation(fy, p);
  out.eq_z = pack_equation(fz, p);
  out.n_obs_effective = static_cast<std::size_t>(t_eff);
  out.johansen = jo;
  out.design = std::move(design);
  return out;
}

LevelVar vecm_to_var(const VecmFit& fit) {
  const int p = fit.lag_order;
  LevelVar var;
  var.order = p + 1;
  var.coef.assign(static_cast<std::size_t>(p + 1), {{{0.0, 0.0}, {0.0, 0.0}}});

  const double ay = fit.eq_y.loading, az = fit.eq_z.loading;
  const double b1 = 1.0, b2 = -fit.longrun_slope;
  // Pi = loading (1, -slope); constant folds in through the restricted term.
  const double pi[2][2] = {{ay * b1, ay * b2}, {az * b1, az * b2}};
  var.intercept = {-ay * fit.longrun_intercept, -az * fit.longrun_intercept};

  auto gamma = [&](int i, int row, int col) {
    // row 0 = y equation, row 1 = z equation; col 0 = dy lag, col 1 = dz lag.
    const std::size_t ix = static_cast<std::size_t>(i - 1);
    if (row == 0) return col == 0 ? fit.eq_y.own_coef[ix] : fit.eq_y.cross_coef[ix];
    return col == 0 ? fit.eq_z.cross_coef[ix] : fit.eq_z.own_coef[ix];
  };

  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 2; ++col) {
      const double eye = row == col ? 1.0 : 0.0;
      var.coef[0][row][col] = eye + pi[row][col] + (p >= 1 ? gamma(1, row, col) : 0.0);
      for (int i = 2; i <= p; ++i)
        var.coef[static_cast<std::size_t>(i - 1)][row][col] =
            gamma(i, row, col) - gamma(i - 1, row, col);
      var.coef[static_cast<std::size_t>(p)][row][col] = -gamma(p, row, col);
    }
  return var;
}

BlockTest granger_block_test(const VecmFit& fit, VecmEq equation, LagBlock block) {
  if (!fit.design) fail(errc::invalid_parameter, "fit carries no estimation sample");
  const VecmDesign& d = *fit.design;
  if (d.p < 1) fail(errc::invalid_parameter, "no lag block to test");

  const bool y_side = equation == VecmEq::y_eq;
  const std::vector<double>& response = y_side ? d.dy : d.dz;
  const auto& own = y_side ? d.dy_lags : d.dz_lags;
  const auto& cross = y_side ? d.dz_lags : d.dy_lags;
  const std::vector<double>& ssr_source =
      y_side ? fit.eq_y.residuals : fit.eq_z.residuals;

  double ssr_u = 0.0;
  for (double e : ssr_source) ssr_u += e * e;

  // Restricted model drops the tested block.
  std::vector<std::vector<double>> cols;
  const auto& kept = block == LagBlock::cross ? own : cross;
  for (const auto& c : kept) cols.push_back(c);
  cols.push_back(d.ect);
  const OlsFit restricted = ols(response, cols);

  const std::size_t t_eff = response.size();
  const int m = d.p;
  const std::size_t k_u = static_cast<std::size_t>(2 * d.p + 1);
  if (t_eff <= k_u) fail(errc::too_few_observations, "sample too small for block test");
  const double df2 = static_cast<double>(t_eff - k_u);
  if (!(ssr_u > 0.0)) fail(errc::degenerate_residuals, "perfect fit in unrestricted model");

  BlockTest out;
  out.df1 = m;
  out.df2 = t_eff - k_u;
  out.statistic = ((restricted.ssr - ssr_u) / static_cast<double>(m)) / (ssr_u / df2);
  if (out.statistic < 0.0) out.statistic = 0.0;  // numerical guard
  out.p_value = f_sf(out.statistic, static_cast<double>(m), df2);
  return out;
}

double half_life(double gamma) {
  if (!(gamma > -1.0 && gamma < 0.0))
    fail(errc::out_of_domain, "decay coefficient must lie in (-1, 0)");
  return std::log(0.5) / std::log1p(gamma);
}

}  // namespace ck
