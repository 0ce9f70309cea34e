#include "ck/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "ck/errors.hpp"

namespace ck {
namespace {

// One step of x' = g x + F(t) with F linear between the endpoint samples.
// J0 = int_0^h e^{g(h-u)} du, J1 = int_0^h u e^{g(h-u)} du, both exact.
double exp_step(double x0, double g, double h, double fa, double fb) {
  double j0, j1;
  if (std::abs(g) * h < 1e-12) {
    j0 = h * (1.0 + 0.5 * g * h);
    j1 = h * h * (0.5 + g * h / 3.0);
  } else {
    const double em1 = std::expm1(g * h);
    j0 = em1 / g;
    j1 = (em1 - g * h) / (g * g);
  }
  const double growth = std::abs(g) * h < 1e-12 ? 1.0 + g * h + 0.5 * g * g * h * h
                                                : std::exp(g * h);
  return x0 * growth + fa * j0 + (fb - fa) * (j1 / h);
}

void check_grid(const std::vector<double>& t, bool require_origin) {
  if (t.size() < 2) fail(errc::invalid_parameter, "time grid needs at least 2 nodes");
  if (require_origin && t.front() != 0.0)
    fail(errc::invalid_parameter, "time grid must start at 0");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1]))
      fail(errc::invalid_parameter, "time grid must increase strictly");
  for (double v : t)
    if (!std::isfinite(v)) fail(errc::invalid_parameter, "non-finite grid node");
}

}  // namespace

void KineticParams::validate() const {
  if (!(std::isfinite(q) && q > 0.0 && q < 1.0))
    fail(errc::invalid_parameter, "q must lie in (0,1)");
  if (!(std::isfinite(beta) && beta > 0.0))
    fail(errc::invalid_parameter, "beta must be positive");
  if (!(std::isfinite(delta) && delta > -1.0))
    fail(errc::invalid_parameter, "delta must exceed -1");
  if (!(std::isfinite(alpha) && alpha >= 0.0))
    fail(errc::invalid_parameter, "alpha must be nonnegative");
}

ParamsFile load_params_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_parameter, "cannot open params file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_parameter, path + ": " + e.what());
  }
  ParamsFile pf;
  try {
    pf.params.q = doc.at("q").get<double>();
    pf.params.beta = doc.at("beta").get<double>();
    pf.params.delta = doc.at("delta").get<double>();
    pf.params.alpha = doc.value("alpha", 0.0);
    pf.dt_per_observation = doc.value("dt_per_observation", kTradingDt);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_parameter, path + ": " + e.what());
  }
  pf.params.validate();
  if (!(std::isfinite(pf.dt_per_observation) && pf.dt_per_observation > 0.0))
    fail(errc::invalid_parameter, "dt_per_observation must be positive");
  return pf;
}

void save_params_json(const ParamsFile& pf, const std::string& path) {
  pf.params.validate();
  nlohmann::ordered_json doc;
  doc["q"] = pf.params.q;
  doc["beta"] = pf.params.beta;
  doc["delta"] = pf.params.delta;
  doc["alpha"] = pf.params.alpha;
  doc["dt_per_observation"] = pf.dt_per_observation;
  std::ofstream out(path);
  if (!out) fail(errc::invalid_parameter, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

double interaction_rule(double x, double X, const KineticParams& p) {
  p.validate();
  return (1.0 - p.q) * x + p.q * X * (1.0 + p.delta);
}

SamplePath::SamplePath(std::vector<double> times, std::vector<double> values,
                       PathInterp interp)
    : t_(std::move(times)), v_(std::move(values)), interp_(interp) {
  if (t_.size() != v_.size())
    fail(errc::invalid_parameter, "path times and values differ in length");
  if (t_.empty()) fail(errc::path_too_short, "path has no samples");
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (!(t_[i] > t_[i - 1]))
      fail(errc::invalid_parameter, "path times must increase strictly");
  for (double v : v_)
    if (!std::isfinite(v)) fail(errc::non_finite_value, "non-finite path value");
}

SamplePath SamplePath::from_series(const TimeSeries& ts, double dt, PathInterp interp) {
  if (!(std::isfinite(dt) && dt > 0.0))
    fail(errc::invalid_parameter, "dt must be positive");
  std::vector<double> t(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) t[i] = static_cast<double>(i) * dt;
  return SamplePath(std::move(t), ts.values(), interp);
}

double SamplePath::operator()(double t) const {
  if (t <= t_.front()) return v_.front();
  if (t >= t_.back()) return v_.back();
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - t_.begin());
  const std::size_t lo = hi - 1;
  if (interp_ == PathInterp::piecewise_constant) return v_[lo];
  const double w = (t - t_[lo]) / (t_[hi] - t_[lo]);
  return v_[lo] + w * (v_[hi] - v_[lo]);
}

namespace {

// Merge the output grid with the path's breakpoints so each integration cell
// sees a genuinely linear (or constant) forcing segment. Returns the merged
// nodes plus, for each output node, its index in the merged grid.
void merge_grids(const std::vector<double>& t_grid, const SamplePath& X,
                 std::vector<double>& merged, std::vector<std::size_t>& out_ix) {
  const double lo = t_grid.front(), hi = t_grid.back();
  const double eps = 1e-12 * std::max(1.0, std::abs(hi));
  merged.clear();
  out_ix.clear();
  std::size_t g = 0, b = 0;
  const auto& bp = X.times();
  while (b < bp.size() && bp[b] <= lo + eps) ++b;
  while (g < t_grid.size() || (b < bp.size() && bp[b] < hi - eps)) {
    const bool take_bp = g >= t_grid.size() ||
                         (b < bp.size() && bp[b] < hi - eps && bp[b] < t_grid[g] - eps);
    if (take_bp) {
      merged.push_back(bp[b++]);
    } else {
      if (b < bp.size() && std::abs(bp[b] - t_grid[g]) <= eps) ++b;  // coincident
      out_ix.push_back(merged.size());
      merged.push_back(t_grid[g++]);
    }
  }
}

}  // namespace

SentimentPath sentiment_closed_form(const KineticParams& p, const SamplePath& X,
                                    double s0, const std::vector<double>& t_grid) {
  p.validate();
  if (!std::isfinite(s0)) fail(errc::invalid_parameter, "s0 must be finite");
  check_grid(t_grid, /*require_origin=*/true);

  const double k = p.relaxation_rate();
  const double lift = 1.0 + p.delta;

  std::vector<double> merged;
  std::vector<std::size_t> out_ix;
  merge_grids(t_grid, X, merged, out_ix);

  std::vector<double> s_merged(merged.size());
  double s = s0;
  s_merged[0] = s;
  for (std::size_t i = 1; i < merged.size(); ++i) {
    const double ta = merged[i - 1], tb = merged[i];
    const double h = tb - ta;
    double fa, fb;
    if (X.interp() == PathInterp::piecewise_constant) {
      fa = fb = k * lift * X(ta);
    } else {
      fa = k * lift * X(ta);
      fb = k * lift * X(tb);
    }
    s = exp_step(s, -k, h, fa, fb);
    s_merged[i] = s;
  }

  SentimentPath out;
  out.t = t_grid;
  out.s.resize(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) out.s[i] = s_merged[out_ix[i]];
  return out;
}

SentimentPath sentiment_rk4(const KineticParams& p, const SamplePath& X, double s0,
                            const std::vector<double>& t_grid) {
  p.validate();
  if (!std::isfinite(s0)) fail(errc::invalid_parameter, "s0 must be finite");
  check_grid(t_grid, /*require_origin=*/true);

  const double k = p.relaxation_rate();
  const double lift = 1.0 + p.delta;
  auto rhs = [&](double t, double s) { return k * (X(t) * lift - s); };

  SentimentPath out;
  out.t = t_grid;
  out.s.resize(t_grid.size());
  double s = s0;
  out.s[0] = s;
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double t = t_grid[i - 1];
    const double h = t_grid[i] - t;
    const double k1 = rhs(t, s);
    const double k2 = rhs(t + 0.5 * h, s + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, s + 0.5 * h * k2);
    const double k4 = rhs(t + h, s + h * k3);
    s += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.s[i] = s;
  }
  return out;
}

double variance_rhs(const KineticParams& p, double v, double s, double x,
                    VarianceVariant variant) {
  p.validate();
  const double b = p.beta, q = p.q;
  const double target = x * (1.0 + p.delta);
  if (variant == VarianceVariant::corrected) {
    const double dev = s - target;
    return (-2.0 * p.alpha + b * (q * q - 2.0 * q)) * v + b * q * q * dev * dev;
  }
  return (2.0 * p.alpha + b * (q * q - 2.0 * q)) * v + b * (q * q - 2.0 * q) * s * s +
         2.0 * b * q * (1.0 - 2.0 * q) * target * s + b * q * q * target * target;
}

GammaCoefficient gamma_coefficient(const KineticParams& p, VarianceVariant variant) {
  p.validate();
  const double shared = p.beta * (p.q * p.q - 2.0 * p.q);
  const double g = variant == VarianceVariant::corrected ? -2.0 * p.alpha + shared
                                                         : 2.0 * p.alpha + shared;
  return {g, g < 0.0};
}

namespace {

VariancePath variance_path_common(const KineticParams& p, const SentimentPath& s_path,
                                  const SamplePath& X, double v0,
                                  VarianceVariant variant, bool use_rk4) {
  p.validate();
  if (!(std::isfinite(v0) && v0 >= 0.0))
    fail(errc::invalid_parameter, "v0 must be nonnegative");
  check_grid(s_path.t, /*require_origin=*/false);
  if (s_path.s.size() != s_path.t.size())
    fail(errc::invalid_parameter, "sentiment path sizes differ");

  const double gamma = gamma_coefficient(p, variant).gamma;
  auto forcing = [&](double s, double x) {
    return variance_rhs(p, 0.0, s, x, variant);  // rhs at v = 0 is the forcing
  };

  const std::size_t n = s_path.t.size();
  VariancePath out;
  out.t = s_path.t;
  out.v.resize(n);
  out.variant = variant;
  double v = v0;
  out.v[0] = v;

  if (!use_rk4) {
    for (std::size_t i = 1; i < n; ++i) {
      const double h = s_path.t[i] - s_path.t[i - 1];
      const double fa = forcing(s_path.s[i - 1], X(s_path.t[i - 1]));
      const double fb = forcing(s_path.s[i], X(s_path.t[i]));
      v = exp_step(v, gamma, h, fa, fb);
      out.v[i] = v;
    }
    return out;
  }

  auto s_at = [&](double t) {
    const auto& tg = s_path.t;
    if (t <= tg.front()) return s_path.s.front();
    if (t >= tg.back()) return s_path.s.back();
    const auto it = std::upper_bound(tg.begin(), tg.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - tg.begin());
    const double w = (t - tg[hi - 1]) / (tg[hi] - tg[hi - 1]);
    return s_path.s[hi - 1] + w * (s_path.s[hi] - s_path.s[hi - 1]);
  };
  auto rhs = [&](double t, double vv) {
    return gamma * vv + forcing(s_at(t), X(t));
  };
  for (std::size_t i = 1; i < n; ++i) {
    const double t = s_path.t[i - 1];
    const double h = s_path.t[i] - t;
    const double k1 = rhs(t, v);
    const double k2 = rhs(t + 0.5 * h, v + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, v + 0.5 * h * k2);
    const double k4 = rhs(t + h, v + h * k3);
    v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.v[i] = v;
  }
  return out;
}

}  // namespace

VariancePath variance_solve(const KineticParams& p, const SentimentPath& s_path,
                            const SamplePath& X, double v0, VarianceVariant variant) {
  return variance_path_common(p, s_path, X, v0, variant, /*use_rk4=*/false);
}

VariancePath variance_rk4(const KineticParams& p, const SentimentPath& s_path,
                          const SamplePath& X, double v0, VarianceVariant variant) {
  return variance_path_common(p, s_path, X, v0, variant, /*use_rk4=*/true);
}

}  // namespace ck
