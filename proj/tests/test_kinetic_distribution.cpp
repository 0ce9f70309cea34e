// Full distribution dynamics on the grid: transport of the initial condition
// along the drift characteristics, the factorial term bound, and the series
// solution checked against the closed-form moments it must embed.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ck/errors.hpp"
#include "ck/kinetic.hpp"
#include "ck/neumann.hpp"

namespace {

const ck::KineticParams kBase{0.28, 6.05, 0.143, 0.0};

ck::SamplePath flat_path(double level, double t_max) {
  return ck::SamplePath({0.0, t_max}, {level, level});
}

double sup_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("lognormal grid carries the requested moments", "[distribution]") {
  const ck::GridDistribution g = ck::lognormal_grid(4096, 10000.0, 2000.0, 0.1);
  const ck::Moments m = ck::moments_of(g);
  CHECK(m.m0 == Catch::Approx(1.0).margin(2e-4));
  CHECK(m.mean == Catch::Approx(2000.0).epsilon(1e-3));
  // Lognormal variance: center^2 (e^{w^2} - 1).
  const double var = 2000.0 * 2000.0 * (std::exp(0.01) - 1.0);
  CHECK(m.variance == Catch::Approx(var).epsilon(5e-3));

  CHECK_THROWS_AS(ck::lognormal_grid(8, 100.0, 10.0, 0.1), ck::Error);
  CHECK_THROWS_AS(ck::lognormal_grid(64, -1.0, 10.0, 0.1), ck::Error);
}

TEST_CASE("grid validation catches malformed densities", "[distribution]") {
  ck::GridDistribution g = ck::lognormal_grid(64, 100.0, 20.0, 0.2);
  CHECK_NOTHROW(g.validate());
  g.f[3] = -0.5;
  CHECK_THROWS_AS(g.validate(), ck::Error);
  g = ck::lognormal_grid(64, 100.0, 20.0, 0.2);
  g.x[1] += 0.1;  // non-uniform spacing
  CHECK_THROWS_AS(g.validate(), ck::Error);
}

TEST_CASE("transport without drift is pure exponential damping", "[distribution]") {
  // alpha = 0: characteristics are vertical, only the weight e^{-beta t} acts.
  const ck::GridDistribution f0 = ck::lognormal_grid(2048, 8000.0, 2000.0, 0.1);
  const ck::SentimentPath s{{0.0, 1.0}, {2000.0, 2000.0}};
  const double t = 0.3;
  const ck::GridDistribution out = ck::transported_initial(f0, kBase, s, t);
  const double damp = std::exp(-kBase.beta * t);
  for (std::size_t j = 0; j < f0.f.size(); j += 97)
    CHECK(out.f[j] == Catch::Approx(damp * f0.f[j]).margin(1e-12));
  CHECK(out.time == t);
}

TEST_CASE("transport follows the relaxation characteristic", "[distribution]") {
  // With alpha > 0 and s constant, a narrow bump centered at x0 moves to
  // s + (x0 - s) e^{-alpha t}.
  ck::KineticParams p = kBase;
  p.alpha = 1.5;
  const double s_level = 1000.0, x0 = 3000.0, t = 0.4;
  const ck::GridDistribution f0 = ck::lognormal_grid(8192, 16000.0, x0, 0.02);
  const ck::SentimentPath s{{0.0, 1.0}, {s_level, s_level}};
  const ck::GridDistribution out = ck::transported_initial(f0, p, s, t);

  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t j = 0; j < out.f.size(); ++j)
    if (out.f[j] > best) { best = out.f[j]; arg = j; }
  const double expected = s_level + (x0 - s_level) * std::exp(-p.alpha * t);
  CHECK(std::abs(out.x[arg] - expected) <= 1.5 * out.dx());
}

TEST_CASE("transport refuses grids the stretch would overrun", "[distribution]") {
  ck::KineticParams p = kBase;
  p.alpha = 1.0;
  // Center far up the grid: the backtrace x e^{alpha t} needs values beyond
  // x_max where the density is still visibly nonzero.
  ck::GridDistribution wide = ck::lognormal_grid(2048, 4000.0, 3200.0, 0.4);
  const ck::SentimentPath s{{0.0, 1.0}, {2000.0, 2000.0}};
  CHECK_THROWS_AS(ck::transported_initial(wide, p, s, 0.5), ck::Error);
}

TEST_CASE("series term bound has the stated factorial form", "[distribution]") {
  const ck::KineticParams p{0.5, 2.0, 0.0, 0.0};
  // (beta T / (1-q))^n / n! with beta T / (1-q) = 4.
  CHECK(ck::neumann_norm_bound(p, 1.0, 0) == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(ck::neumann_norm_bound(p, 1.0, 5) == Catch::Approx(1024.0 / 120.0).epsilon(1e-10));
  CHECK(ck::neumann_norm_bound(p, 1.0, 40) < 1e-15);
  CHECK_THROWS_AS(ck::neumann_norm_bound(p, -1.0, 3), ck::Error);
}

TEST_CASE("series solution reproduces the closed-form mean", "[distribution][neumann]") {
  const double T = 0.5;
  const ck::SamplePath X = flat_path(2000.0, T);
  const ck::GridDistribution f0 = ck::lognormal_grid(2048, 9144.0, 2000.0, 0.1);
  const ck::NeumannSolution sol = ck::neumann_solve(kBase, X, f0, T);
  REQUIRE(sol.converged);
  CHECK(sol.mass_drift < 0.01);
  CHECK(sol.n_terms > 3);

  // Measured term norms must sit under the factorial bound scaled by the
  // zeroth term's norm.
  for (int n = 1; n < sol.n_terms; ++n)
    CHECK(sol.term_norms[static_cast<std::size_t>(n)] <=
          1.05 * sol.term_norms[0] * ck::neumann_norm_bound(kBase, T, n));

  // Grid mean against the closed form at the horizon.
  const ck::Moments mT = ck::moments_of(sol.slices.back());
  const double s_exact = sol.sentiment.s.back();
  CHECK(mT.mean == Catch::Approx(s_exact).epsilon(0.02));
}

TEST_CASE("zero-interaction series is exactly the transported initial", "[distribution][neumann]") {
  // With one term allowed and tolerance loose, the partial sum is F alone.
  const double T = 0.2;
  const ck::SamplePath X = flat_path(1000.0, T);
  const ck::GridDistribution f0 = ck::lognormal_grid(1024, 4600.0, 1000.0, 0.1);
  ck::NeumannOptions opts;
  opts.tol = 1e9;  // accept the zeroth term immediately
  opts.n_max = 1;
  const ck::NeumannSolution sol = ck::neumann_solve(kBase, X, f0, T, opts);
  REQUIRE(sol.n_terms == 1);
  const ck::GridDistribution f =
      ck::transported_initial(f0, kBase, sol.sentiment, T);
  CHECK(sup_gap(sol.slices.back().f, f.f) < 1e-14);
}

TEST_CASE("converged series is a fixed point of the gain equation", "[distribution][neumann]") {
  const double T = 0.5;
  const ck::SamplePath X = flat_path(2000.0, T);
  const ck::GridDistribution f0 = ck::lognormal_grid(2048, 9144.0, 2000.0, 0.1);
  const ck::NeumannSolution sol = ck::neumann_solve(kBase, X, f0, T);
  REQUIRE(sol.converged);

  const std::vector<ck::GridDistribution> gain = ck::apply_gain(kBase, X, sol.slices);
  double f_sup = 0.0;
  for (double v : f0.f) f_sup = std::max(f_sup, v);
  double resid = 0.0;
  for (std::size_t i = 0; i < sol.times.size(); ++i) {
    const ck::GridDistribution F =
        ck::transported_initial(f0, kBase, sol.sentiment, sol.times[i]);
    for (std::size_t j = 0; j < F.f.size(); ++j)
      resid = std::max(resid,
                       std::abs(sol.slices[i].f[j] - F.f[j] - gain[i].f[j]));
  }
  CHECK(resid < 1e-6 * f_sup);
}

TEST_CASE("series solver rejects grids that cannot hold the attractor", "[distribution][neumann]") {
  // Interaction target X (1+delta) = 2286 beyond x_max = 2000.
  const ck::SamplePath X = flat_path(2000.0, 0.5);
  const ck::GridDistribution f0 = ck::lognormal_grid(1024, 2000.0, 800.0, 0.1);
  CHECK_THROWS_AS(ck::neumann_solve(kBase, X, f0, 0.5), ck::Error);
}

TEST_CASE("exhausted term budget reports non-convergence", "[distribution][neumann]") {
  const double T = 0.5;
  const ck::SamplePath X = flat_path(2000.0, T);
  const ck::GridDistribution f0 = ck::lognormal_grid(1024, 9144.0, 2000.0, 0.1);
  ck::NeumannOptions opts;
  opts.tol = 1e-12;
  opts.n_max = 2;  // far too few terms for this horizon
  CHECK_THROWS_AS(ck::neumann_solve(kBase, X, f0, T, opts), ck::Error);
}
