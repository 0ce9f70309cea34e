// Direct ensemble simulation of the interaction model: deterministic drift
// toward the ensemble mean plus Poisson-timed jumps to the marked-up index.
// Draws are counter-addressed per particle and per step, and reductions use
// fixed-size chunks, so results are bit-identical for any thread count.
#pragma once

#include <cstdint>
#include <vector>

#include "ck/kinetic.hpp"

namespace ck {

struct ParticleEnsemble {
  std::vector<double> positions;
  double time = 0.0;
};

// Lognormal initial positions centered on `center` with relative spread
// `rel_width` (sigma of log positions).
ParticleEnsemble lognormal_ensemble(std::size_t n, double center, double rel_width,
                                    std::uint64_t seed);

struct ParticleRunResult {
  std::vector<double> times;
  std::vector<double> mean;
  std::vector<double> variance;         // population variance
  std::vector<double> variance_stderr;  // MC standard error of the variance
  ParticleEnsemble final_state;
  bool step_warning = false;  // beta * max step > 0.1
};

// Evolves the ensemble over t_grid (strictly increasing, starting at the
// ensemble's own time). Each step applies Euler drift alpha (s - x) h, then a
// jump with exact exponential probability 1 - e^{-beta h} toward
// interaction_rule(x, X(t_mid), p). s is the ensemble mean, refreshed every
// step.
ParticleRunResult particle_simulate(const KineticParams& p, const SamplePath& X,
                                    const ParticleEnsemble& init,
                                    const std::vector<double>& t_grid,
                                    std::uint64_t seed);

}  // namespace ck
