#include "ck/johansen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ck/errors.hpp"

namespace ck {
namespace {

// Trace-test asymptotic critical values, restricted-constant case,
// by number of common trends under the null (1%, 5%, 10% columns).
constexpr CriticalValues kTraceOneTrend{12.97, 9.24, 7.52};
constexpr CriticalValues kTraceTwoTrends{20.20, 15.67, 13.75};

void require_varying(const TimeSeries& s) {
  const auto [lo, hi] = std::minmax_element(s.values().begin(), s.values().end());
  if (*lo == *hi) fail(errc::constant_series, "series '" + s.label() + "' is constant");
}

}  // namespace

JohansenResult johansen(const TimeSeries& y, const TimeSeries& z, int p,
                        SigLevel level) {
  if (p < 0) fail(errc::invalid_parameter, "lag order must be nonnegative");
  auto [ya, za] = align(y, z);
  require_varying(ya);
  require_varying(za);

  const int n = static_cast<int>(ya.size());
  const int t_eff = n - 1 - p;
  if (t_eff < 2 * p + 12)
    fail(errc::too_few_observations, "effective sample " + std::to_string(t_eff) +
                                         " too small for lag order " + std::to_string(p));

  // Observation t (levels index p+1..n-1):
  //   R0 side: (dy_t, dz_t); R1 side: (y_{t-1}, z_{t-1}, 1);
  //   both partialled on the p lagged difference pairs.
  Eigen::MatrixXd z0(t_eff, 2), z1(t_eff, 3);
  Eigen::MatrixXd lagged(t_eff, 2 * p);
  auto yv = [&](int i) { return ya.value(static_cast<std::size_t>(i)); };
  auto zv = [&](int i) { return za.value(static_cast<std::size_t>(i)); };
  for (int r = 0; r < t_eff; ++r) {
    const int t = r + p + 1;
    z0(r, 0) = yv(t) - yv(t - 1);
    z0(r, 1) = zv(t) - zv(t - 1);
    z1(r, 0) = yv(t - 1);
    z1(r, 1) = zv(t - 1);
    z1(r, 2) = 1.0;
    for (int i = 1; i <= p; ++i) {
      lagged(r, 2 * (i - 1)) = yv(t - i) - yv(t - i - 1);
      lagged(r, 2 * (i - 1) + 1) = zv(t - i) - zv(t - i - 1);
    }
  }

  Eigen::MatrixXd r0 = z0, r1 = z1;
  if (p > 0) {
    const Eigen::MatrixXd gram = lagged.transpose() * lagged;
    const auto solver = gram.ldlt();
    r0 -= lagged * solver.solve(lagged.transpose() * z0);
    r1 -= lagged * solver.solve(lagged.transpose() * z1);
  }

  const double tt = static_cast<double>(t_eff);
  const Eigen::MatrixXd s00 = r0.transpose() * r0 / tt;
  const Eigen::MatrixXd s01 = r0.transpose() * r1 / tt;
  const Eigen::MatrixXd s11 = r1.transpose() * r1 / tt;

  const Eigen::LDLT<Eigen::MatrixXd> s00d(s00);
  if (s00d.info() != Eigen::Success || !s00d.isPositive())
    fail(errc::numerical_failure, "difference covariance not positive definite");
  const Eigen::LLT<Eigen::MatrixXd> s11c(s11);
  if (s11c.info() != Eigen::Success)
    fail(errc::numerical_failure, "level covariance not positive definite");
  // A = S10 S00^{-1} S01, generalized against B = S11.
  const Eigen::MatrixXd a = s01.transpose() * s00d.solve(s01);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(a, s11);
  if (ges.info() != Eigen::Success)
    fail(errc::numerical_failure, "eigenproblem failed");

  // Ascending from Eigen; the smallest of the three belongs to the constant
  // direction and is dropped from the trace statistics.
  const Eigen::VectorXd lam = ges.eigenvalues();
  const double l1 = std::clamp(lam(2), 0.0, 1.0 - 1e-14);
  const double l2 = std::clamp(lam(1), 0.0, 1.0 - 1e-14);

  JohansenResult out;
  out.eigenvalues = {l1, l2};
  out.trace_r0 = -tt * (std::log1p(-l1) + std::log1p(-l2));
  out.trace_r1 = -tt * std::log1p(-l2);
  out.crit_r0 = kTraceTwoTrends;
  out.crit_r1 = kTraceOneTrend;
  out.level = level;
  if (out.trace_r0 <= out.crit_r0.at(level))
    out.selected_rank = 0;
  else if (out.trace_r1 <= out.crit_r1.at(level))
    out.selected_rank = 1;
  else
    out.selected_rank = 2;

  // Leading vector (v' S11 v = 1 from the solver); normalize on y.
  const Eigen::VectorXd v = ges.eigenvectors().col(2);
  if (std::abs(v(0)) < 1e-12)
    fail(errc::numerical_failure, "cointegrating vector not normalizable on y");
  out.longrun_slope = -v(1) / v(0);
  out.longrun_intercept = -v(2) / v(0);
  const Eigen::VectorXd alpha = s01 * v * v(0);  // loadings for the normalized vector
  out.loading_y = alpha(0);
  out.loading_z = alpha(1);
  out.lag_order = p;
  out.n_obs_effective = static_cast<std::size_t>(t_eff);
  return out;
}

}  // namespace ck
