#include "ck/synthetic.hpp"

#include <cmath>

#include "ck/errors.hpp"
#include "ck/rng.hpp"

namespace ck {

std::vector<Date> weekday_dates(Date start, std::size_t n) {
  std::vector<Date> out;
  out.reserve(n);
  Date d = start.is_weekend() ? start.next_weekday() : start;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(d);
    d = d.next_weekday();
  }
  return out;
}

namespace {

const Date kSynthStart = Date::from_ymd(2015, 1, 5);  // a Monday

}  // namespace

TimeSeries synth_gbm(double x0, double mu, double sigma, std::size_t n, double dt,
                     std::uint64_t seed) {
  if (!(x0 > 0.0)) fail(errc::invalid_parameter, "gbm needs x0 > 0");
  if (!(sigma >= 0.0)) fail(errc::invalid_parameter, "gbm needs sigma >= 0");
  if (!(dt > 0.0)) fail(errc::invalid_parameter, "gbm needs dt > 0");
  if (n < 2) fail(errc::invalid_parameter, "gbm needs n >= 2");

  Philox rng(seed);
  RngStream shocks(rng, 0);
  std::vector<double> x(n);
  x[0] = x0;
  const double drift = (mu - 0.5 * sigma * sigma) * dt;
  const double vol = sigma * std::sqrt(dt);
  for (std::size_t i = 1; i < n; ++i)
    x[i] = x[i - 1] * std::exp(drift + vol * shocks.normal());
  return TimeSeries(weekday_dates(kSynthStart, n), std::move(x), "index");
}

CointegratedPair synth_cointegrated_pair(double slope, double intercept, double rho,
                                         double sigma_u, double sigma_z,
                                         std::size_t n, std::uint64_t seed) {
  if (!(std::abs(rho) < 1.0))
    fail(errc::invalid_parameter, "disturbance needs |rho| < 1");
  if (!(sigma_u > 0.0 && sigma_z > 0.0))
    fail(errc::invalid_parameter, "innovation scales must be positive");
  if (n < 20) fail(errc::invalid_parameter, "pair needs n >= 20");

  Philox rng(seed);
  RngStream z_shocks(rng, 0), u_shocks(rng, 1), init(rng, 2);

  std::vector<double> z(n), y(n);
  z[0] = 100.0;
  double u = sigma_u / std::sqrt(1.0 - rho * rho) * init.normal();  // stationary start
  y[0] = slope * z[0] + intercept + u;
  for (std::size_t i = 1; i < n; ++i) {
    z[i] = z[i - 1] + sigma_z * z_shocks.normal();
    u = rho * u + sigma_u * u_shocks.normal();
    y[i] = slope * z[i] + intercept + u;
  }
  auto dates = weekday_dates(kSynthStart, n);
  return {TimeSeries(dates, std::move(y), "y"), TimeSeries(dates, std::move(z), "z")};
}

TimeSeries synth_sentiment(const KineticParams& p, const TimeSeries& index, double s0,
                           double noise_sigma, std::uint64_t seed, double dt) {
  p.validate();
  if (!(noise_sigma >= 0.0)) fail(errc::invalid_parameter, "noise_sigma must be >= 0");
  const SamplePath X = SamplePath::from_series(index, dt);
  const SentimentPath s = sentiment_closed_form(p, X, s0, X.times());

  Philox rng(seed);
  RngStream noise(rng, 0);
  std::vector<double> v(s.s.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = s.s[i] + noise_sigma * noise.normal();
  return TimeSeries(index.dates(), std::move(v), "consensus");
}

}  // namespace ck
