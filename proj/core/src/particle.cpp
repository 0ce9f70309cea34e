#include "ck/particle.hpp"

#include <cmath>

#include "ck/errors.hpp"
#include "ck/parallel.hpp"
#include "ck/rng.hpp"

namespace ck {

ParticleEnsemble lognormal_ensemble(std::size_t n, double center, double rel_width,
                                    std::uint64_t seed) {
  if (n == 0) fail(errc::empty_ensemble, "ensemble size must be positive");
  if (!(center > 0.0)) fail(errc::invalid_parameter, "center must be positive");
  if (!(rel_width >= 0.0)) fail(errc::invalid_parameter, "rel_width must be >= 0");

  Philox rng(seed);
  ParticleEnsemble ens;
  ens.positions.resize(n);
  // Counter 0 of each particle's stream is reserved for its initial draw.
  const double mu = std::log(center) - 0.5 * rel_width * rel_width;
  for (std::size_t i = 0; i < n; ++i)
    ens.positions[i] = std::exp(mu + rel_width * rng.normal(i, 0));
  return ens;
}

namespace {

struct ChunkMoments {
  double sum = 0.0, sum2 = 0.0, sum3 = 0.0, sum4 = 0.0;
};

// Deterministic two-pass moments: per-chunk partial sums combined in chunk
// order, independent of the worker count.
void ensemble_moments(const std::vector<double>& x, std::vector<ChunkMoments>& slots,
                      double& mean, double& m2, double& m4) {
  const std::size_t n = x.size();
  const std::size_t n_chunks = (n + kDefaultChunk - 1) / kDefaultChunk;
  slots.assign(n_chunks, {});
  parallel_chunks(n, kDefaultChunk, [&](std::size_t c, std::size_t b, std::size_t e) {
    double s = 0.0;
    for (std::size_t i = b; i < e; ++i) s += x[i];
    slots[c].sum = s;
  });
  double total = 0.0;
  for (const auto& slot : slots) total += slot.sum;
  mean = total / static_cast<double>(n);

  parallel_chunks(n, kDefaultChunk, [&](std::size_t c, std::size_t b, std::size_t e) {
    double s2 = 0.0, s4 = 0.0;
    for (std::size_t i = b; i < e; ++i) {
      const double d = x[i] - mean;
      const double d2 = d * d;
      s2 += d2;
      s4 += d2 * d2;
    }
    slots[c].sum2 = s2;
    slots[c].sum4 = s4;
  });
  double t2 = 0.0, t4 = 0.0;
  for (const auto& slot : slots) {
    t2 += slot.sum2;
    t4 += slot.sum4;
  }
  m2 = t2 / static_cast<double>(n);
  m4 = t4 / static_cast<double>(n);
}

}  // namespace

ParticleRunResult particle_simulate(const KineticParams& p, const SamplePath& X,
                                    const ParticleEnsemble& init,
                                    const std::vector<double>& t_grid,
                                    std::uint64_t seed) {
  p.validate();
  if (init.positions.empty()) fail(errc::empty_ensemble, "no particles");
  if (t_grid.size() < 2) fail(errc::invalid_time_step, "time grid needs >= 2 nodes");
  if (t_grid.front() != init.time)
    fail(errc::invalid_time_step, "grid must start at the ensemble time");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      fail(errc::invalid_time_step, "time grid must increase strictly");

  const std::size_t n = init.positions.size();
  const std::size_t n_steps = t_grid.size() - 1;
  const double lift = 1.0 + p.delta;
  Philox rng(seed);

  ParticleRunResult out;
  out.times = t_grid;
  out.mean.resize(t_grid.size());
  out.variance.resize(t_grid.size());
  out.variance_stderr.resize(t_grid.size());
  out.final_state.positions = init.positions;

  std::vector<ChunkMoments> slots;
  auto record = [&](std::size_t ix) {
    double mean, m2, m4;
    ensemble_moments(out.final_state.positions, slots, mean, m2, m4);
    out.mean[ix] = mean;
    out.variance[ix] = m2;
    const double var_of_var = std::max(0.0, m4 - m2 * m2);
    out.variance_stderr[ix] = std::sqrt(var_of_var / static_cast<double>(n));
  };
  record(0);

  auto& x = out.final_state.positions;
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double t0 = t_grid[step], t1 = t_grid[step + 1];
    const double h = t1 - t0;
    if (p.beta * h > 0.1) out.step_warning = true;
    const double s = out.mean[step];
    const double target = X(0.5 * (t0 + t1)) * lift;
    const double jump_prob = -std::expm1(-p.beta * h);
    const double drift = p.alpha * h;
    // Counter 0 is the initial draw; step k uses counter k+1 of each stream.
    const std::uint64_t ctr = step + 1;

    parallel_chunks(n, kDefaultChunk, [&](std::size_t, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        double xi = x[i];
        xi += drift * (s - xi);
        if (rng.uniform(i, ctr) < jump_prob) xi = (1.0 - p.q) * xi + p.q * target;
        x[i] = xi;
      }
    });
    record(step + 1);
  }
  out.final_state.time = t_grid.back();
  return out;
}

}  // namespace ck
