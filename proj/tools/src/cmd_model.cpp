#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ck/calibration.hpp"
#include "ck/engle_granger.hpp"
#include "ck/errors.hpp"
#include "ck/evaluation.hpp"
#include "ck/neumann.hpp"
#include "ck/particle.hpp"
#include "common.hpp"

namespace cli {
namespace {

std::optional<ck::Date> parse_boundary(const std::string& raw) {
  if (raw.empty()) return std::nullopt;
  return ck::Date::parse_iso(raw);
}

// Writes a (t, value...) table with stable shortest-round-trip formatting.
void save_columns(const std::string& path, const std::vector<std::string>& names,
                  const std::vector<const std::vector<double>*>& cols) {
  std::ofstream out(path);
  if (!out) ck::fail(ck::errc::invalid_parameter, "cannot write '" + path + "'");
  for (std::size_t j = 0; j < names.size(); ++j)
    out << (j ? "," : "") << names[j];
  out << "\n";
  char buf[32];
  const std::size_t n = cols.front()->size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, (*cols[j])[i]);
      (void)ec;
      out << (j ? "," : "") << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << "\n";
  }
}

struct CalibrateOpts {
  std::string index, consensus, train_end, out;
  double s0 = -1.0, dt = ck::kTradingDt, q_fixed = 0.28, tol = 1e-9;
  std::size_t budget = 500, refine = 5;
  int max_iter = 400;
  std::uint64_t seed = 0;
};

struct ForecastOpts {
  std::string index, consensus, params, train_end, out;
  double s0 = -1.0;
};

struct SimulateOpts {
  std::string index, params, engine = "closed-form", variant = "corrected", out;
  double t_max = -1.0, s0 = -1.0, v0 = 0.0, rel_width = 0.1, x_max = -1.0;
  std::size_t n_particles = 20000, n_x = 2048;
  std::uint64_t seed = 0;
};

struct ReportOpts {
  std::string calib, forecast, measured, baseline, out;
};

}  // namespace

void register_model(CLI::App& app) {
  {
    auto o = std::make_shared<CalibrateOpts>();
    auto* cmd = app.add_subcommand(
        "calibrate", "fit (k, delta) to a consensus series over the training window");
    cmd->add_option("--index", o->index, "index CSV")->required();
    cmd->add_option("--consensus", o->consensus, "consensus CSV")->required();
    cmd->add_option("--train-end", o->train_end, "last training date (ISO), default all");
    cmd->add_option("--s0", o->s0, "initial sentiment (default: first consensus value)");
    cmd->add_option("--dt", o->dt, "year fraction per observation");
    cmd->add_option("--budget", o->budget, "global search evaluations");
    cmd->add_option("--refine", o->refine, "local refinements from the best candidates");
    cmd->add_option("--q-fixed", o->q_fixed, "q used to split k into q*beta");
    cmd->add_option("--tol", o->tol, "refinement tolerance");
    cmd->add_option("--max-iter", o->max_iter, "refinement iteration cap");
    cmd->add_option("--seed", o->seed, "search seed");
    cmd->add_option("--out", o->out, "output directory")->required();
    cmd->callback([o] {
      ck::TimeSeries index = load_series(o->index, "value", false);
      ck::TimeSeries consensus = load_series(o->consensus, "value", false);
      if (const auto boundary = parse_boundary(o->train_end)) {
        index = ck::split(index, {*boundary}).first;
        consensus = ck::split(consensus, {*boundary}).first;
      }
      const auto prob = ck::CalibrationProblem::make(
          index, consensus,
          o->s0 < 0.0 ? std::nullopt : std::optional<double>(o->s0), o->dt);
      ck::CalibrationConfig cfg;
      cfg.budget = o->budget;
      cfg.n_refine = o->refine;
      cfg.tol = o->tol;
      cfg.max_iter = o->max_iter;
      cfg.q_fixed = o->q_fixed;
      cfg.seed = o->seed;
      const ck::CalibrationResult result = ck::calibrate(prob, cfg);

      ensure_dir(o->out);
      const std::string path = join_path(o->out, "calibration.json");
      ck::save_calibration_json(result, o->dt, path);
      write_manifest(o->out, "calibrate", {path}, o->seed);
      nlohmann::ordered_json doc;
      doc["k"] = result.k;
      doc["delta"] = result.delta;
      doc["objective"] = result.objective;
      doc["converged"] = result.converged;
      emit_result(doc, false);
    });
  }

  {
    auto o = std::make_shared<ForecastOpts>();
    auto* cmd = app.add_subcommand(
        "forecast", "closed-form sentiment over the test window, plus the static "
                    "long-run baseline when a consensus file is given");
    cmd->add_option("--index", o->index, "index CSV")->required();
    cmd->add_option("--params", o->params, "parameter JSON")->required();
    cmd->add_option("--consensus", o->consensus, "consensus CSV (baseline + s0 source)");
    cmd->add_option("--train-end", o->train_end, "last training date (ISO)");
    cmd->add_option("--s0", o->s0, "initial sentiment at the forecast start");
    cmd->add_option("--out", o->out, "output directory")->required();
    cmd->callback([o] {
      const ck::ParamsFile pf = ck::load_params_json(o->params);
      ck::TimeSeries index = load_series(o->index, "value", false);
      std::optional<ck::TimeSeries> consensus;
      if (!o->consensus.empty()) consensus = load_series(o->consensus, "value", false);

      std::optional<ck::TimeSeries> train_index, train_consensus;
      const auto boundary = parse_boundary(o->train_end);
      if (boundary) {
        auto parts = ck::split(index, {*boundary});
        train_index = parts.first;
        index = parts.second;
        if (consensus) {
          auto cparts = ck::split(*consensus, {*boundary});
          train_consensus = cparts.first;
          consensus = cparts.second;
        }
      }

      double s0 = o->s0;
      if (s0 < 0.0) {
        if (!consensus)
          ck::fail(ck::errc::invalid_parameter,
                   "--s0 required when no consensus file is given");
        s0 = consensus->value(0);
      }

      const ck::SamplePath X =
          ck::SamplePath::from_series(index, pf.dt_per_observation);
      const ck::SentimentPath s =
          ck::sentiment_closed_form(pf.params, X, s0, X.times());
      ck::TimeSeries forecast(index.dates(), s.s, "forecast");

      ensure_dir(o->out);
      std::vector<std::string> outputs;
      const std::string fpath = join_path(o->out, "forecast.csv");
      ck::save_csv(forecast, fpath, "value");
      outputs.push_back(fpath);

      if (train_index && train_consensus) {
        // Baseline: static long-run regression fit on the training window.
        const ck::EngleGrangerResult eg = ck::engle_granger(*train_consensus, *train_index);
        const ck::TimeSeries baseline = ck::baseline_cointegration_forecast(eg, index);
        const std::string bpath = join_path(o->out, "baseline.csv");
        ck::save_csv(baseline, bpath, "value");
        outputs.push_back(bpath);
      }
      write_manifest(o->out, "forecast", outputs, std::nullopt);
    });
  }

  {
    auto o = std::make_shared<SimulateOpts>();
    auto* cmd = app.add_subcommand(
        "simulate", "evolve the model along an index path with a chosen engine");
    cmd->add_option("--index", o->index, "index CSV")->required();
    cmd->add_option("--params", o->params, "parameter JSON")->required();
    cmd->add_option("--engine", o->engine, "particle|neumann|closed-form");
    cmd->add_option("--variant", o->variant,
                    "variance drift for closed-form: paper|corrected");
    cmd->add_option("--t-max", o->t_max, "horizon in years (default: full path)");
    cmd->add_option("--s0", o->s0, "initial mean (default: first index value)");
    cmd->add_option("--v0", o->v0, "initial variance for closed-form");
    cmd->add_option("--rel-width", o->rel_width,
                    "initial lognormal spread for particle/neumann");
    cmd->add_option("--n-particles", o->n_particles, "ensemble size");
    cmd->add_option("--n-x", o->n_x, "grid nodes for neumann");
    cmd->add_option("--x-max", o->x_max, "grid end for neumann (default: auto)");
    cmd->add_option("--seed", o->seed, "ensemble seed");
    cmd->add_option("--out", o->out, "output directory")->required();
    cmd->callback([o] {
      const ck::ParamsFile pf = ck::load_params_json(o->params);
      const ck::TimeSeries index = load_series(o->index, "value", false);
      const ck::SamplePath X =
          ck::SamplePath::from_series(index, pf.dt_per_observation);
      std::vector<double> grid = X.times();
      if (o->t_max > 0.0) {
        std::vector<double> cut;
        for (double t : grid)
          if (t <= o->t_max + 1e-12) cut.push_back(t);
        grid = std::move(cut);
        if (grid.size() < 2)
          ck::fail(ck::errc::invalid_parameter, "--t-max leaves fewer than 2 nodes");
      }
      const double s0 = o->s0 < 0.0 ? index.value(0) : o->s0;

      ensure_dir(o->out);
      const std::string path = join_path(o->out, "simulate.csv");

      if (o->engine == "closed-form") {
        ck::VarianceVariant variant;
        if (o->variant == "corrected") variant = ck::VarianceVariant::corrected;
        else if (o->variant == "paper") variant = ck::VarianceVariant::published;
        else ck::fail(ck::errc::invalid_parameter, "variant must be paper|corrected");
        const ck::SentimentPath s = ck::sentiment_closed_form(pf.params, X, s0, grid);
        const ck::VariancePath v = ck::variance_solve(pf.params, s, X, o->v0, variant);
        save_columns(path, {"t", "mean", "variance"}, {&s.t, &s.s, &v.v});
      } else if (o->engine == "particle") {
        const ck::ParticleEnsemble init =
            ck::lognormal_ensemble(o->n_particles, s0, o->rel_width, o->seed);
        const ck::ParticleRunResult run =
            ck::particle_simulate(pf.params, X, init, grid, o->seed);
        if (run.step_warning)
          std::cerr << "warning: beta * dt exceeds 0.1; jump timing is coarse\n";
        save_columns(path, {"t", "mean", "variance", "variance_stderr"},
                     {&run.times, &run.mean, &run.variance, &run.variance_stderr});
      } else if (o->engine == "neumann") {
        double x_hi = o->x_max;
        if (x_hi <= 0.0) {
          double top = s0;
          for (double v : index.values())
            top = std::max(top, v * (1.0 + pf.params.delta));
          x_hi = 2.5 * top;
        }
        const ck::GridDistribution f0 =
            ck::lognormal_grid(o->n_x, x_hi, s0, o->rel_width);
        const ck::NeumannSolution sol =
            ck::neumann_solve(pf.params, X, f0, grid.back());
        std::vector<double> t, mean, variance, mass;
        for (std::size_t i = 0; i < sol.slices.size(); ++i) {
          const ck::Moments m = ck::moments_of(sol.slices[i]);
          t.push_back(sol.times[i]);
          mean.push_back(m.mean);
          variance.push_back(m.variance);
          mass.push_back(m.m0);
        }
        save_columns(path, {"t", "mean", "variance", "mass"},
                     {&t, &mean, &variance, &mass});
      } else {
        ck::fail(ck::errc::invalid_parameter,
                 "engine must be particle|neumann|closed-form");
      }
      write_manifest(o->out, "simulate", {path}, o->seed);
    });
  }

  {
    auto o = std::make_shared<ReportOpts>();
    auto* cmd = app.add_subcommand(
        "report", "score a forecast against the measured series");
    cmd->add_option("--calib", o->calib, "calibration JSON")->required();
    cmd->add_option("--forecast", o->forecast, "forecast CSV")->required();
    cmd->add_option("--measured", o->measured, "measured consensus CSV")->required();
    cmd->add_option("--baseline", o->baseline, "baseline forecast CSV");
    cmd->add_option("--out", o->out, "output directory")->required();
    cmd->callback([o] {
      const ck::ParamsFile pf = ck::load_params_json(o->calib);
      // Echo the calibrated parameters into the report.
      std::ifstream in(o->calib);
      nlohmann::json raw;
      in >> raw;
      ck::CalibrationResult calib;
      calib.params = pf.params;
      calib.k = raw.value("k", pf.params.q * pf.params.beta);
      calib.delta = pf.params.delta;
      calib.objective = raw.value("objective", 0.0);
      calib.converged = raw.value("converged", true);

      const ck::TimeSeries forecast = load_series(o->forecast, "value", false);
      const ck::TimeSeries measured = load_series(o->measured, "value", false);
      std::optional<ck::TimeSeries> baseline;
      if (!o->baseline.empty()) baseline = load_series(o->baseline, "value", false);

      const ck::ReportBundle bundle =
          ck::write_report(o->out, calib, forecast, measured, baseline);
      write_manifest(o->out, "report", bundle.files, std::nullopt);
      emit_result(bundle.document, false);
    });
  }
}

}  // namespace cli
