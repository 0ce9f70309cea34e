#include "ck/neumann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ck/errors.hpp"

namespace ck {

void GridDistribution::validate() const {
  if (x.size() != f.size()) fail(errc::invalid_parameter, "grid and values differ");
  if (x.size() < 16) fail(errc::grid_too_coarse, "need at least 16 grid nodes");
  if (x.front() != 0.0) fail(errc::invalid_parameter, "grid must start at 0");
  const double step = x[1] - x[0];
  if (!(step > 0.0)) fail(errc::invalid_parameter, "grid must increase");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs((x[i] - x[i - 1]) - step) > 1e-9 * step)
      fail(errc::invalid_parameter, "grid must be uniform");
  for (double v : f) {
    if (!std::isfinite(v)) fail(errc::non_finite_value, "non-finite density value");
    if (v < 0.0) fail(errc::invalid_parameter, "density must be nonnegative");
  }
}

GridDistribution lognormal_grid(std::size_t n, double x_max, double center,
                                double rel_width) {
  if (n < 16) fail(errc::grid_too_coarse, "need at least 16 grid nodes");
  if (!(x_max > 0.0 && center > 0.0 && rel_width > 0.0))
    fail(errc::invalid_parameter, "x_max, center, rel_width must be positive");
  GridDistribution g;
  g.x.resize(n);
  g.f.resize(n);
  const double dx = x_max / static_cast<double>(n - 1);
  const double mu = std::log(center) - 0.5 * rel_width * rel_width;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) * dx;
    g.x[i] = x;
    if (x <= 0.0) {
      g.f[i] = 0.0;
    } else {
      const double zl = (std::log(x) - mu) / rel_width;
      g.f[i] = std::exp(-0.5 * zl * zl) /
               (x * rel_width * std::sqrt(2.0 * 3.14159265358979323846));
    }
  }
  return g;
}

namespace {

double trapezoid(const std::vector<double>& x, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    acc += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
  return acc;
}

// Linear interpolation with zero extension outside [0, x_max].
double interp_zero(const std::vector<double>& x, const std::vector<double>& f,
                   double dx, double xq) {
  if (xq < 0.0 || xq > x.back()) return 0.0;
  const double pos = xq / dx;
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo >= x.size() - 1) return f.back();
  const double w = pos - static_cast<double>(lo);
  return f[lo] + w * (f[lo + 1] - f[lo]);
}

// alpha * int_0^t s(u) e^{alpha u} du with s piecewise linear on its grid.
double drift_displacement(const SentimentPath& s_path, double alpha, double t) {
  if (alpha == 0.0 || t <= 0.0) return 0.0;
  double acc = 0.0;
  const auto& tg = s_path.t;
  for (std::size_t i = 1; i < tg.size() && tg[i - 1] < t; ++i) {
    const double ta = tg[i - 1];
    const double tb = std::min(tg[i], t);
    const double h = tb - ta;
    if (!(h > 0.0)) continue;
    const double w = (tb - tg[i - 1]) / (tg[i] - tg[i - 1]);
    const double sa = s_path.s[i - 1];
    const double sb = s_path.s[i - 1] + w * (s_path.s[i] - s_path.s[i - 1]);
    double k0, k1;
    if (alpha * h < 1e-12) {
      k0 = h * (1.0 + 0.5 * alpha * h);
      k1 = h * h * (0.5 + alpha * h / 3.0);
    } else {
      const double em1 = std::expm1(alpha * h);
      k0 = em1 / alpha;
      k1 = (h * (em1 + 1.0) * alpha - em1) / (alpha * alpha);
    }
    acc += std::exp(alpha * ta) * (sa * k0 + (sb - sa) * (k1 / h));
  }
  // Constant extension beyond the stored path.
  const double t_end = tg.back();
  if (t > t_end) {
    const double s_last = s_path.s.back();
    acc += s_last * (std::exp(alpha * t) - std::exp(alpha * t_end)) / alpha;
  }
  return alpha * acc;
}

// Gain operator on a space-time table: at each (t_i, x_j) the integrand is
// the scaled input at the pre-interaction position (x - q X(t)(1+d))/(1-q),
// zero when that is negative, then the exponentially weighted time integral
// runs by trapezoid recurrence. Shared by the series loop and apply_gain.
void gain_apply(const KineticParams& p, const SamplePath& X,
                const std::vector<double>& times, const std::vector<double>& xg,
                double dx, const std::vector<std::vector<double>>& in,
                std::vector<std::vector<double>>& out) {
  const std::size_t n_t = times.size();
  const std::size_t n_x = xg.size();
  const double rate = p.beta - p.alpha;
  const double gain_scale = p.beta / (1.0 - p.q);
  const double lift = 1.0 + p.delta;

  auto integrand = [&](std::size_t i, std::vector<double>& h) {
    const double target = p.q * X(times[i]) * lift;
    for (std::size_t j = 0; j < n_x; ++j) {
      const double y = (xg[j] - target) / (1.0 - p.q);
      h[j] = y < 0.0 ? 0.0 : gain_scale * interp_zero(xg, in[i], dx, y);
    }
  };

  std::vector<double> h_prev(n_x), h_cur(n_x);
  integrand(0, h_prev);
  out[0].assign(n_x, 0.0);
  for (std::size_t i = 1; i < n_t; ++i) {
    const double hstep = times[i] - times[i - 1];
    const double decay = std::exp(-rate * hstep);
    integrand(i, h_cur);
    out[i].resize(n_x);
    for (std::size_t j = 0; j < n_x; ++j)
      out[i][j] = decay * out[i - 1][j] +
                  0.5 * hstep * (decay * h_prev[j] + h_cur[j]);
    std::swap(h_prev, h_cur);
  }
}

}  // namespace

std::vector<GridDistribution> apply_gain(const KineticParams& p, const SamplePath& X,
                                         const std::vector<GridDistribution>& slices) {
  p.validate();
  if (slices.size() < 2) fail(errc::path_too_short, "need at least 2 time slices");
  for (const auto& g : slices) g.validate();
  std::vector<double> times;
  times.reserve(slices.size());
  for (const auto& g : slices) times.push_back(g.time);
  if (times.front() != 0.0) fail(errc::invalid_parameter, "slices must start at t=0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1]))
      fail(errc::invalid_parameter, "slice times must increase");
    if (slices[i].x.size() != slices[0].x.size())
      fail(errc::invalid_parameter, "slices must share one grid");
  }

  std::vector<std::vector<double>> in, out(times.size());
  in.reserve(slices.size());
  for (const auto& g : slices) in.push_back(g.f);
  gain_apply(p, X, times, slices[0].x, slices[0].dx(), in, out);

  std::vector<GridDistribution> result(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    result[i].x = slices[0].x;
    result[i].f = std::move(out[i]);
    result[i].time = times[i];
  }
  return result;
}

GridDistribution transported_initial(const GridDistribution& f_in,
                                     const KineticParams& p,
                                     const SentimentPath& s_path, double t) {
  p.validate();
  f_in.validate();
  if (!(t >= 0.0)) fail(errc::invalid_parameter, "t must be nonnegative");

  const double stretch = std::exp(p.alpha * t);
  if (p.alpha > 0.0 && t > 0.0) {
    // The backtrace x e^{alpha t} leaves the grid near x_max; that is only
    // harmless if the initial condition has already decayed there.
    double fmax = 0.0;
    for (double v : f_in.f) fmax = std::max(fmax, v);
    if (f_in.f.back() > 1e-9 * fmax)
      fail(errc::grid_too_coarse,
           "initial condition still has support at the grid end");
  }

  const double shift = drift_displacement(s_path, p.alpha, t);
  const double weight = std::exp((p.alpha - p.beta) * t);
  GridDistribution out;
  out.x = f_in.x;
  out.f.resize(f_in.f.size());
  out.time = t;
  const double dx = f_in.dx();
  for (std::size_t j = 0; j < out.x.size(); ++j) {
    const double arg = out.x[j] * stretch - shift;
    out.f[j] = arg < 0.0 ? 0.0 : weight * interp_zero(f_in.x, f_in.f, dx, arg);
  }
  return out;
}

double neumann_norm_bound(const KineticParams& p, double T, int n) {
  p.validate();
  if (!(T > 0.0)) fail(errc::invalid_parameter, "T must be positive");
  if (n < 0) fail(errc::invalid_parameter, "n must be nonnegative");
  const double r = p.beta * T / (1.0 - p.q);
  return std::exp(static_cast<double>(n) * std::log(r) -
                  std::lgamma(static_cast<double>(n) + 1.0));
}

NeumannSolution neumann_solve(const KineticParams& p, const SamplePath& X,
                              const GridDistribution& f_in, double T,
                              const NeumannOptions& opts) {
  p.validate();
  f_in.validate();
  if (!(T > 0.0)) fail(errc::invalid_parameter, "T must be positive");
  if (!(opts.tol > 0.0)) fail(errc::invalid_parameter, "tol must be positive");
  if (opts.n_max < 1) fail(errc::invalid_parameter, "n_max must be >= 1");

  // Time grid: 0, the path's interior sample times, T, then uniform fill so
  // no step exceeds T/n_min. The discrete series only inherits the factorial
  // decay of the continuous one while the step count exceeds the term count;
  // a sparsely sampled path would otherwise turn the iteration geometric.
  std::vector<double> times;
  times.push_back(0.0);
  const double eps = 1e-12 * std::max(1.0, T);
  for (double tv : X.times())
    if (tv > eps && tv < T - eps) times.push_back(tv);
  times.push_back(T);
  const double h_max = T / static_cast<double>(std::max(128, 2 * opts.n_max));
  std::vector<double> refined;
  refined.reserve(times.size());
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    refined.push_back(times[i]);
    const double gap = times[i + 1] - times[i];
    const int pieces = static_cast<int>(std::ceil(gap / h_max));
    for (int k = 1; k < pieces; ++k)
      refined.push_back(times[i] + gap * static_cast<double>(k) / pieces);
  }
  refined.push_back(times.back());
  times = std::move(refined);

  const std::size_t n_t = times.size();
  const std::size_t n_x = f_in.x.size();
  const double dx = f_in.dx();

  const Moments init_m = moments_of(f_in);
  if (!(init_m.m0 > 0.0)) fail(errc::invalid_parameter, "initial mass must be positive");
  const SentimentPath s_path = sentiment_closed_form(p, X, init_m.mean, times);

  // Attractor positions must stay inside the grid or the gain loses mass by
  // construction rather than by tolerance.
  double x_target_max = 0.0;
  for (std::size_t i = 0; i < n_t; ++i)
    x_target_max = std::max(x_target_max, X(times[i]) * (1.0 + p.delta));
  if (x_target_max >= f_in.x.back())
    fail(errc::grid_too_coarse, "grid ends below the interaction target");

  using Slice = std::vector<double>;
  std::vector<Slice> total(n_t, Slice(n_x, 0.0));
  std::vector<Slice> term(n_t), next(n_t, Slice(n_x, 0.0));

  // Term 0: transported initial condition.
  double norm0 = 0.0;
  for (std::size_t i = 0; i < n_t; ++i) {
    GridDistribution slice = transported_initial(f_in, p, s_path, times[i]);
    for (double v : slice.f) norm0 = std::max(norm0, std::abs(v));
    term[i] = std::move(slice.f);
  }

  NeumannSolution sol;
  sol.times = times;
  sol.sentiment = s_path;
  sol.term_norms.push_back(norm0);

  auto add_term = [&] {
    for (std::size_t i = 0; i < n_t; ++i)
      for (std::size_t j = 0; j < n_x; ++j) total[i][j] += term[i][j];
  };
  add_term();

  bool converged = sol.term_norms.back() <= opts.tol;
  int n_terms = 1;

  while (!converged && n_terms < opts.n_max) {
    gain_apply(p, X, times, f_in.x, dx, term, next);
    std::swap(term, next);
    double norm = 0.0;
    for (std::size_t i = 0; i < n_t; ++i)
      for (double v : term[i]) norm = std::max(norm, std::abs(v));
    sol.term_norms.push_back(norm);
    add_term();
    ++n_terms;
    converged = norm <= opts.tol;
  }
  if (!converged)
    fail(errc::not_converged, "series term still " +
                                  std::to_string(sol.term_norms.back()) + " after " +
                                  std::to_string(n_terms) + " terms");

  sol.n_terms = n_terms;
  sol.converged = converged;
  sol.slices.reserve(n_t);
  for (std::size_t i = 0; i < n_t; ++i) {
    GridDistribution g;
    g.x = f_in.x;
    g.f = std::move(total[i]);
    g.time = times[i];
    sol.slices.push_back(std::move(g));
  }

  const double m0_0 = trapezoid(sol.slices[0].x, sol.slices[0].f);
  double drift = 0.0;
  for (const auto& g : sol.slices) {
    const double m0 = trapezoid(g.x, g.f);
    drift = std::max(drift, std::abs(m0 - m0_0) / m0_0);
  }
  sol.mass_drift = drift;
  return sol;
}

Moments moments_of(const GridDistribution& g) {
  g.validate();
  const std::size_t n = g.x.size();
  std::vector<double> xf(n), x2f(n);
  for (std::size_t i = 0; i < n; ++i) {
    xf[i] = g.x[i] * g.f[i];
    x2f[i] = g.x[i] * g.x[i] * g.f[i];
  }
  Moments m;
  m.m0 = trapezoid(g.x, g.f);
  m.m1 = trapezoid(g.x, xf);
  m.m2 = trapezoid(g.x, x2f);
  if (!(m.m0 > 0.0)) fail(errc::zero_denominator, "distribution carries no mass");
  m.mean = m.m1 / m.m0;
  m.variance = m.m2 / m.m0 - m.mean * m.mean;
  return m;
}

Moments moments_of(const ParticleEnsemble& e) {
  if (e.positions.empty()) fail(errc::empty_ensemble, "no particles");
  const double n = static_cast<double>(e.positions.size());
  Moments m;
  m.m0 = 1.0;
  for (double x : e.positions) {
    m.m1 += x;
    m.m2 += x * x;
  }
  m.m1 /= n;
  m.m2 /= n;
  m.mean = m.m1;
  m.variance = m.m2 - m.mean * m.mean;
  return m;
}

}  // namespace ck
