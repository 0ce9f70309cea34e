// Series solution of the full distribution dynamics on a fixed grid: the
// transported initial condition plus repeated applications of the gain
// operator, summed until the newest term falls below tolerance. Factorial
// decay of the term norms guarantees convergence for any horizon.
#pragma once

#include <cstddef>
#include <vector>

#include "ck/kinetic.hpp"
#include "ck/particle.hpp"

namespace ck {

// Density samples on a uniform grid over [0, x_max]; nonnegative, finite.
struct GridDistribution {
  std::vector<double> x;
  std::vector<double> f;
  double time = 0.0;

  double dx() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
  void validate() const;
};

// Lognormal density sampled on n nodes over [0, x_max]; rel_width is the
// sigma of log positions, center the distribution mean.
GridDistribution lognormal_grid(std::size_t n, double x_max, double center,
                                double rel_width);

struct Moments {
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  double mean = 0.0, variance = 0.0;
};

Moments moments_of(const GridDistribution& g);   // trapezoid in x
Moments moments_of(const ParticleEnsemble& e);   // sample moments, m0 = 1

// Initial condition pushed along the drift characteristics to time t and
// damped by the interaction rate: evaluates f_in at the backtraced position
// x e^{alpha t} - alpha int_0^t s(u) e^{alpha u} du, weighted e^{(alpha-beta)t}.
GridDistribution transported_initial(const GridDistribution& f_in,
                                     const KineticParams& p,
                                     const SentimentPath& s_path, double t);

// Sup-norm bound on the n-th series term per unit of initial data:
// (beta T / (1-q))^n / n!.
double neumann_norm_bound(const KineticParams& p, double T, int n);

// One application of the gain operator to a space-time table (one slice per
// time, all on a common grid, times strictly increasing from 0). This is the
// same kernel the series solver iterates, so the fixed-point residual
// f - transported_initial - gain(f) of a converged solution is measurable.
std::vector<GridDistribution> apply_gain(const KineticParams& p, const SamplePath& X,
                                         const std::vector<GridDistribution>& slices);

struct NeumannOptions {
  double tol = 1e-8;  // sup-norm threshold on the newest term
  int n_max = 64;
};

struct NeumannSolution {
  std::vector<double> times;
  std::vector<GridDistribution> slices;  // accumulated f(t_i, .)
  std::vector<double> term_norms;        // sup norm of each term over (t, x)
  SentimentPath sentiment;               // mean path used in the transport
  int n_terms = 0;
  bool converged = false;
  double mass_drift = 0.0;  // max_t |m0(t) - m0(0)| / m0(0)
};

// Time grid: the path's sample times restricted to [0, T] plus both
// endpoints. Throws NotConverged when n_max terms leave the newest term
// above tolerance, GridTooCoarse when the grid cannot carry the transport.
NeumannSolution neumann_solve(const KineticParams& p, const SamplePath& X,
                              const GridDistribution& f_in, double T,
                              const NeumannOptions& opts = {});

}  // namespace ck
