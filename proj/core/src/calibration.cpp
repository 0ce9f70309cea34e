#include "ck/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "ck/errors.hpp"
#include "ck/rng.hpp"

namespace ck {

CalibrationProblem CalibrationProblem::make(const TimeSeries& index,
                                            const TimeSeries& consensus,
                                            std::optional<double> s0, double dt,
                                            ParamBounds bounds) {
  auto [xa, ca] = align(index, consensus);
  if (xa.size() < 10)
    fail(errc::series_too_short, "calibration needs at least 10 shared dates");
  if (!(dt > 0.0)) fail(errc::invalid_parameter, "dt must be positive");
  if (!(bounds.k_lo > 0.0 && bounds.k_hi > bounds.k_lo))
    fail(errc::invalid_parameter, "k bounds must satisfy 0 < lo < hi");
  if (!(bounds.delta_lo > -1.0 && bounds.delta_hi > bounds.delta_lo))
    fail(errc::invalid_parameter, "delta bounds must satisfy -1 < lo < hi");
  const double s0v = s0.value_or(ca.value(0));
  if (!std::isfinite(s0v)) fail(errc::invalid_parameter, "s0 must be finite");
  return CalibrationProblem{std::move(xa), std::move(ca), s0v, dt, bounds};
}

double objective_kdelta(double k, double delta, const CalibrationProblem& prob) {
  if (!(k > 0.0)) fail(errc::invalid_parameter, "k must be positive");
  if (!(delta > -1.0)) fail(errc::invalid_parameter, "delta must exceed -1");
  // Any (q, beta) with q beta = k produces the same mean path; use q = 1/2.
  const KineticParams p{0.5, 2.0 * k, delta, 0.0};
  const SamplePath X = SamplePath::from_series(prob.index, prob.dt);
  const SentimentPath s = sentiment_closed_form(p, X, prob.s0, X.times());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.s.size(); ++i) {
    const double d = s.s[i] - prob.consensus.value(i);
    acc += d * d;
  }
  return std::sqrt(acc);
}

double objective(const KineticParams& p, const CalibrationProblem& prob) {
  p.validate();
  return objective_kdelta(p.relaxation_rate(), p.delta, prob);
}

namespace {

double safe_objective(double k, double delta, const CalibrationProblem& prob,
                      std::size_t& evals) {
  ++evals;
  const double v = objective_kdelta(k, delta, prob);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

void sort_candidates(std::vector<Candidate>& cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.objective != b.objective) return a.objective < b.objective;
    if (a.k != b.k) return a.k < b.k;
    return a.delta < b.delta;
  });
}

}  // namespace

std::vector<Candidate> global_search(const CalibrationProblem& prob,
                                     std::size_t budget, std::uint64_t seed) {
  if (budget < 1) fail(errc::invalid_budget, "global search budget must be >= 1");

  Philox rng(seed);
  RngStream jitter(rng, 0), shuffle(rng, 1);

  // Latin hypercube: stratify both axes, pair strata by a seeded permutation.
  const std::size_t n = budget;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(shuffle.uniform() * static_cast<double>(i));
    std::swap(perm[i - 1], perm[std::min(j, i - 1)]);
  }

  const double lk_lo = std::log(prob.bounds.k_lo), lk_hi = std::log(prob.bounds.k_hi);
  std::vector<Candidate> out;
  out.reserve(n);
  std::size_t evals = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double uk = (static_cast<double>(i) + jitter.uniform()) / static_cast<double>(n);
    const double ud = (static_cast<double>(perm[i]) + jitter.uniform()) / static_cast<double>(n);
    Candidate c;
    c.k = std::exp(lk_lo + uk * (lk_hi - lk_lo));
    c.delta = prob.bounds.delta_lo + ud * (prob.bounds.delta_hi - prob.bounds.delta_lo);
    c.objective = safe_objective(c.k, c.delta, prob, evals);
    out.push_back(c);
  }
  sort_candidates(out);
  return out;
}

CalibrationResult local_refine(const CalibrationProblem& prob, Candidate start,
                               double tol, int max_iter, double q_fixed) {
  if (!(tol > 0.0)) fail(errc::invalid_parameter, "tol must be positive");
  if (max_iter < 1) fail(errc::invalid_parameter, "max_iter must be >= 1");
  if (!(q_fixed > 0.0 && q_fixed < 1.0))
    fail(errc::invalid_parameter, "q_fixed must lie in (0,1)");

  const ParamBounds& b = prob.bounds;
  auto clamp = [&](Candidate& c) {
    c.k = std::clamp(c.k, b.k_lo, b.k_hi);
    c.delta = std::clamp(c.delta, b.delta_lo, b.delta_hi);
  };
  std::size_t evals = 0;
  auto eval = [&](Candidate& c) {
    clamp(c);
    c.objective = safe_objective(c.k, c.delta, prob, evals);
  };

  // Initial simplex: the start plus 5% of each bound range.
  std::array<Candidate, 3> sx;
  sx[0] = start;
  eval(sx[0]);
  sx[1] = {start.k + 0.05 * (b.k_hi - b.k_lo), start.delta, 0.0};
  if (sx[1].k > b.k_hi) sx[1].k = start.k - 0.05 * (b.k_hi - b.k_lo);
  eval(sx[1]);
  sx[2] = {start.k, start.delta + 0.05 * (b.delta_hi - b.delta_lo), 0.0};
  if (sx[2].delta > b.delta_hi) sx[2].delta = start.delta - 0.05 * (b.delta_hi - b.delta_lo);
  eval(sx[2]);

  auto order = [&] {
    std::sort(sx.begin(), sx.end(), [](const Candidate& a, const Candidate& c) {
      return a.objective < c.objective;
    });
  };
  order();

  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double spread = sx[2].objective - sx[0].objective;
    const double size = std::abs(sx[2].k - sx[0].k) + std::abs(sx[1].k - sx[0].k) +
                        std::abs(sx[2].delta - sx[0].delta) +
                        std::abs(sx[1].delta - sx[0].delta);
    if (spread <= tol * (1.0 + std::abs(sx[0].objective)) && size <= 1e-7 * (1.0 + std::abs(sx[0].k))) {
      converged = true;
      break;
    }

    const double ck = 0.5 * (sx[0].k + sx[1].k);
    const double cd = 0.5 * (sx[0].delta + sx[1].delta);

    Candidate refl{ck + (ck - sx[2].k), cd + (cd - sx[2].delta), 0.0};
    eval(refl);
    if (refl.objective < sx[0].objective) {
      Candidate expd{ck + 2.0 * (ck - sx[2].k), cd + 2.0 * (cd - sx[2].delta), 0.0};
      eval(expd);
      sx[2] = expd.objective < refl.objective ? expd : refl;
    } else if (refl.objective < sx[1].objective) {
      sx[2] = refl;
    } else {
      const Candidate& base = refl.objective < sx[2].objective ? refl : sx[2];
      Candidate ctr{ck + 0.5 * (base.k - ck), cd + 0.5 * (base.delta - cd), 0.0};
      eval(ctr);
      if (ctr.objective < std::min(refl.objective, sx[2].objective)) {
        sx[2] = ctr;
      } else {
        // Shrink toward the best vertex.
        for (int v = 1; v < 3; ++v) {
          sx[v].k = sx[0].k + 0.5 * (sx[v].k - sx[0].k);
          sx[v].delta = sx[0].delta + 0.5 * (sx[v].delta - sx[0].delta);
          eval(sx[v]);
        }
      }
    }
    order();
  }

  CalibrationResult out;
  out.k = sx[0].k;
  out.delta = sx[0].delta;
  out.objective = sx[0].objective;
  out.params = KineticParams{q_fixed, sx[0].k / q_fixed, sx[0].delta, 0.0};
  out.n_evaluations = evals;
  out.restarts_used = 0;
  out.converged = converged;
  return out;
}

CalibrationResult calibrate(const CalibrationProblem& prob,
                            const CalibrationConfig& cfg) {
  if (cfg.budget < 1) fail(errc::invalid_budget, "calibration budget must be >= 1");
  if (cfg.n_refine < 1) fail(errc::invalid_parameter, "n_refine must be >= 1");

  const std::vector<Candidate> cands = global_search(prob, cfg.budget, cfg.seed);
  const std::size_t n_starts = std::min(cfg.n_refine, cands.size());

  CalibrationResult best;
  best.objective = std::numeric_limits<double>::infinity();
  std::size_t total_evals = cands.size();
  for (std::size_t i = 0; i < n_starts; ++i) {
    CalibrationResult r =
        local_refine(prob, cands[i], cfg.tol, cfg.max_iter, cfg.q_fixed);
    total_evals += r.n_evaluations;
    if (r.objective < best.objective ||
        (r.objective == best.objective && r.k < best.k)) {
      best = r;
    }
  }
  best.n_evaluations = total_evals;
  best.restarts_used = n_starts;
  return best;
}

void save_calibration_json(const CalibrationResult& result, double dt,
                           const std::string& path) {
  nlohmann::ordered_json doc;
  doc["q"] = result.params.q;
  doc["beta"] = result.params.beta;
  doc["delta"] = result.params.delta;
  doc["alpha"] = result.params.alpha;
  doc["k"] = result.k;
  doc["objective"] = result.objective;
  doc["n_evaluations"] = result.n_evaluations;
  doc["restarts_used"] = result.restarts_used;
  doc["converged"] = result.converged;
  doc["dt_per_observation"] = dt;
  std::ofstream out(path);
  if (!out) fail(errc::invalid_parameter, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace ck
