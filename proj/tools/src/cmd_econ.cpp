#include <cmath>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ck/diagnostics.hpp"
#include "ck/engle_granger.hpp"
#include "ck/errors.hpp"
#include "ck/johansen.hpp"
#include "ck/var_select.hpp"
#include "ck/vecm.hpp"
#include "common.hpp"
#include "json_render.hpp"

namespace cli {
namespace {

struct PairArgs {
  std::string y_path, z_path;
  std::string column = "value";
  bool log = false;
  bool table = false;
  int level = 5;
};

void add_pair_args(CLI::App* cmd, const std::shared_ptr<PairArgs>& a,
                   bool with_level = true) {
  cmd->add_option("--y", a->y_path, "left series CSV")->required();
  cmd->add_option("--z", a->z_path, "right series CSV")->required();
  cmd->add_option("--column", a->column, "value column name");
  cmd->add_flag("--log", a->log, "apply natural log to both series");
  cmd->add_flag("--table", a->table, "print an aligned table instead of JSON");
  if (with_level)
    cmd->add_option("--level", a->level, "significance level percent (1, 5, 10)");
}

}  // namespace

void register_econ(CLI::App& app) {
  auto* econ = app.add_subcommand("econ", "cointegration and diagnostic tests");
  econ->require_subcommand(1);

  {
    struct AdfOpts {
      std::string input, column = "value", spec = "none";
      bool log = false, table = false;
      int max_lag = -1, fixed_lag = -1;
    };
    auto o = std::make_shared<AdfOpts>();
    auto* cmd = econ->add_subcommand("adf", "augmented Dickey-Fuller unit-root test");
    cmd->add_option("--input", o->input, "series CSV")->required();
    cmd->add_option("--column", o->column, "value column name");
    cmd->add_flag("--log", o->log, "apply natural log first");
    cmd->add_option("--spec", o->spec, "deterministic terms: none|constant|trend");
    cmd->add_option("--max-lag", o->max_lag, "lag search bound (default: rule of thumb)");
    cmd->add_option("--fixed-lag", o->fixed_lag, "pin the augmentation lag count");
    cmd->add_flag("--table", o->table, "print an aligned table instead of JSON");
    cmd->callback([o] {
      const ck::TimeSeries ts = load_series(o->input, o->column, o->log);
      ck::DetSpec spec;
      if (o->spec == "none") spec = ck::DetSpec::none;
      else if (o->spec == "constant") spec = ck::DetSpec::constant;
      else if (o->spec == "trend") spec = ck::DetSpec::trend;
      else ck::fail(ck::errc::invalid_parameter, "spec must be none|constant|trend");
      const ck::AdfResult r =
          o->fixed_lag >= 0
              ? ck::adf_test(ts, spec, o->fixed_lag, ck::LagRule::fixed)
              : ck::adf_test(ts, spec, o->max_lag, ck::LagRule::aic);
      emit_result(adf_json(r), o->table);
    });
  }

  {
    auto a = std::make_shared<PairArgs>();
    auto* cmd = econ->add_subcommand("eg", "two-step residual cointegration test");
    add_pair_args(cmd, a);
    cmd->callback([a] {
      const ck::TimeSeries y = load_series(a->y_path, a->column, a->log);
      const ck::TimeSeries z = load_series(a->z_path, a->column, a->log);
      emit_result(eg_json(ck::engle_granger(y, z, to_level(a->level))), a->table);
    });
  }

  {
    auto a = std::make_shared<PairArgs>();
    auto p_max = std::make_shared<int>(12);
    auto* cmd = econ->add_subcommand("lags", "VAR lag-order criteria on differences");
    add_pair_args(cmd, a, /*with_level=*/false);
    cmd->add_option("--p-max", *p_max, "largest order to score");
    cmd->callback([a, p_max] {
      const ck::TimeSeries y = load_series(a->y_path, a->column, a->log);
      const ck::TimeSeries z = load_series(a->z_path, a->column, a->log);
      emit_result(lags_json(ck::var_lag_select(y, z, *p_max)), a->table);
    });
  }

  {
    auto a = std::make_shared<PairArgs>();
    auto lags = std::make_shared<int>(1);
    auto* cmd = econ->add_subcommand("johansen", "trace test, restricted constant");
    add_pair_args(cmd, a);
    cmd->add_option("--lags", *lags, "lagged differences in the auxiliary regressions");
    cmd->callback([a, lags] {
      const ck::TimeSeries y = load_series(a->y_path, a->column, a->log);
      const ck::TimeSeries z = load_series(a->z_path, a->column, a->log);
      emit_result(johansen_json(ck::johansen(y, z, *lags, to_level(a->level))), a->table);
    });
  }

  {
    auto a = std::make_shared<PairArgs>();
    auto lags = std::make_shared<int>(1);
    auto rank = std::make_shared<int>(1);
    auto* cmd = econ->add_subcommand("vecm", "error-correction fit");
    add_pair_args(cmd, a, /*with_level=*/false);
    cmd->add_option("--lags", *lags, "lagged difference terms");
    cmd->add_option("--rank", *rank, "requested cointegration rank (1 or 2)");
    cmd->callback([a, lags, rank] {
      const ck::TimeSeries y = load_series(a->y_path, a->column, a->log);
      const ck::TimeSeries z = load_series(a->z_path, a->column, a->log);
      emit_result(vecm_json(ck::vecm_fit(y, z, *lags, *rank)), a->table);
    });
  }

  {
    auto a = std::make_shared<PairArgs>();
    auto lags = std::make_shared<int>(1);
    auto eq = std::make_shared<std::string>("y");
    auto block = std::make_shared<std::string>("cross");
    auto* cmd = econ->add_subcommand("granger", "zero restriction on one lag block");
    add_pair_args(cmd, a, /*with_level=*/false);
    cmd->add_option("--lags", *lags, "lagged difference terms");
    cmd->add_option("--equation", *eq, "which equation: y|z");
    cmd->add_option("--block", *block, "which lag block: own|cross");
    cmd->callback([a, lags, eq, block] {
      const ck::TimeSeries y = load_series(a->y_path, a->column, a->log);
      const ck::TimeSeries z = load_series(a->z_path, a->column, a->log);
      const ck::VecmFit fit = ck::vecm_fit(y, z, *lags, 1);
      ck::VecmEq e;
      if (*eq == "y") e = ck::VecmEq::y_eq;
      else if (*eq == "z") e = ck::VecmEq::z_eq;
      else ck::fail(ck::errc::invalid_parameter, "equation must be y|z");
      ck::LagBlock b;
      if (*block == "own") b = ck::LagBlock::own;
      else if (*block == "cross") b = ck::LagBlock::cross;
      else ck::fail(ck::errc::invalid_parameter, "block must be own|cross");
      emit_result(block_json(ck::granger_block_test(fit, e, b)), a->table);
    });
  }

  {
    struct DiagOpts {
      std::string input, column = "value", test = "jb";
      int lags = 4;
      bool table = false;
    };
    auto o = std::make_shared<DiagOpts>();
    auto* cmd = econ->add_subcommand("diagnose", "residual diagnostics");
    cmd->add_option("--input", o->input, "residual CSV")->required();
    cmd->add_option("--column", o->column, "value column name");
    cmd->add_option("--test", o->test, "bg|jb|arch");
    cmd->add_option("--lags", o->lags, "lag count for bg/arch");
    cmd->add_flag("--table", o->table, "print an aligned table instead of JSON");
    cmd->callback([o] {
      const ck::TimeSeries ts = load_series(o->input, o->column, false);
      ck::DiagnosticResult r;
      if (o->test == "bg") r = ck::breusch_godfrey(ts.values(), o->lags);
      else if (o->test == "jb") r = ck::jarque_bera(ts.values());
      else if (o->test == "arch") r = ck::arch_lm(ts.values(), o->lags);
      else ck::fail(ck::errc::invalid_parameter, "test must be bg|jb|arch");
      emit_result(diag_json(r), o->table);
    });
  }

  {
    auto gamma = std::make_shared<double>(0.0);
    auto table = std::make_shared<bool>(false);
    auto* cmd = econ->add_subcommand("halflife", "periods to halve a disequilibrium");
    cmd->add_option("--gamma", *gamma, "adjustment coefficient, in (-1,0)")->required();
    cmd->add_flag("--table", *table, "print an aligned table instead of JSON");
    cmd->callback([gamma, table] {
      const double hl = ck::half_life(*gamma);
      nlohmann::ordered_json doc;
      doc["gamma"] = *gamma;
      doc["half_life"] = hl;
      doc["half_life_ceil"] = static_cast<long long>(std::ceil(hl));
      emit_result(doc, *table);
    });
  }
}

}  // namespace cli
