#include "ck/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>

#include "ck/errors.hpp"

namespace ck {

double normal_cdf(double x) {
  return boost::math::cdf(boost::math::normal_distribution<double>(), x);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    fail(errc::out_of_domain, "normal quantile needs p in (0,1), got " + std::to_string(p));
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

double chi_squared_sf(double x, double dof) {
  if (!(dof > 0.0)) fail(errc::invalid_parameter, "chi-squared dof must be positive");
  if (x <= 0.0) return 1.0;
  return boost::math::cdf(
      boost::math::complement(boost::math::chi_squared_distribution<double>(dof), x));
}

double f_sf(double x, double dof1, double dof2) {
  if (!(dof1 > 0.0 && dof2 > 0.0)) fail(errc::invalid_parameter, "F dof must be positive");
  if (x <= 0.0) return 1.0;
  return boost::math::cdf(
      boost::math::complement(boost::math::fisher_f_distribution<double>(dof1, dof2), x));
}

double mean_of(const std::vector<double>& x) {
  if (x.empty()) fail(errc::empty_series, "mean of empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double median_of(std::vector<double> x) {
  if (x.empty()) fail(errc::empty_series, "median of empty sample");
  const std::size_t n = x.size();
  auto mid = x.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(x.begin(), mid, x.end());
  if (n % 2 == 1) return *mid;
  const double hi = *mid;
  const double lo = *std::max_element(x.begin(), mid);
  return 0.5 * (lo + hi);
}

double std_error_of(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) fail(errc::series_too_short, "standard error needs at least 2 points");
  const double m = mean_of(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / (static_cast<double>(n - 1) * static_cast<double>(n)));
}

}  // namespace ck
