#include "json_render.hpp"

namespace cli {
namespace {

using nlohmann::ordered_json;

ordered_json crit_json(const ck::CriticalValues& cv) {
  return {{"1%", cv.pct1}, {"5%", cv.pct5}, {"10%", cv.pct10}};
}

ordered_json reject_json(const ck::Rejections& r) {
  return {{"1%", r.pct1}, {"5%", r.pct5}, {"10%", r.pct10}};
}

const char* spec_name(ck::DetSpec s) {
  switch (s) {
    case ck::DetSpec::none: return "none";
    case ck::DetSpec::constant: return "constant";
    case ck::DetSpec::trend: return "trend";
  }
  return "?";
}

ordered_json equation_json(const ck::VecmEquation& eq) {
  ordered_json doc;
  doc["loading"] = {{"estimate", eq.loading},
                    {"std_error", eq.loading_se},
                    {"t_stat", eq.loading_t}};
  ordered_json own = ordered_json::array(), cross = ordered_json::array();
  for (std::size_t i = 0; i < eq.own_coef.size(); ++i)
    own.push_back({{"lag", i + 1},
                   {"estimate", eq.own_coef[i]},
                   {"std_error", eq.own_se[i]},
                   {"t_stat", eq.own_t[i]}});
  for (std::size_t i = 0; i < eq.cross_coef.size(); ++i)
    cross.push_back({{"lag", i + 1},
                     {"estimate", eq.cross_coef[i]},
                     {"std_error", eq.cross_se[i]},
                     {"t_stat", eq.cross_t[i]}});
  doc["own_lags"] = own;
  doc["cross_lags"] = cross;
  doc["r_squared"] = eq.r_squared;
  return doc;
}

}  // namespace

ordered_json adf_json(const ck::AdfResult& r) {
  ordered_json doc;
  doc["test"] = "adf";
  doc["spec"] = spec_name(r.spec);
  doc["statistic"] = r.statistic;
  doc["lag_order"] = r.lag_order;
  doc["critical_values"] = crit_json(r.critical_values);
  doc["reject"] = reject_json(r.reject_at);
  doc["n_obs_effective"] = r.n_obs_effective;
  return doc;
}

ordered_json eg_json(const ck::EngleGrangerResult& r) {
  ordered_json doc;
  doc["test"] = "engle_granger";
  doc["longrun"] = {{"intercept", r.longrun_intercept}, {"slope", r.longrun_slope}};
  doc["residual_adf"] = adf_json(r.residual_adf);
  doc["level"] = r.level == ck::SigLevel::pct1 ? "1%"
                 : r.level == ck::SigLevel::pct5 ? "5%" : "10%";
  doc["cointegrated"] = r.cointegrated;
  return doc;
}

ordered_json lags_json(const ck::LagSelection& r) {
  ordered_json doc;
  doc["test"] = "var_lag_select";
  doc["p_max"] = r.p_max;
  doc["selected"] = {{"aic", r.aic}, {"hq", r.hq}, {"sic", r.sic}, {"fpe", r.fpe}};
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < r.scores.size(); ++i)
    rows.push_back({{"p", i + 1},
                    {"aic", r.scores[i][0]},
                    {"hq", r.scores[i][1]},
                    {"sic", r.scores[i][2]},
                    {"fpe", r.scores[i][3]}});
  doc["scores"] = rows;
  return doc;
}

ordered_json johansen_json(const ck::JohansenResult& r) {
  ordered_json doc;
  doc["test"] = "johansen_trace";
  doc["eigenvalues"] = {r.eigenvalues[0], r.eigenvalues[1]};
  doc["trace"] = {{"r=0",
                   {{"statistic", r.trace_r0},
                    {"critical_values", crit_json(r.crit_r0)}}},
                  {"r<=1",
                   {{"statistic", r.trace_r1},
                    {"critical_values", crit_json(r.crit_r1)}}}};
  doc["selected_rank"] = r.selected_rank;
  doc["longrun"] = {{"slope", r.longrun_slope}, {"intercept", r.longrun_intercept}};
  doc["loadings"] = {{"y", r.loading_y}, {"z", r.loading_z}};
  doc["lag_order"] = r.lag_order;
  doc["n_obs_effective"] = r.n_obs_effective;
  return doc;
}

ordered_json vecm_json(const ck::VecmFit& r) {
  ordered_json doc;
  doc["model"] = "vecm";
  doc["lag_order"] = r.lag_order;
  doc["rank"] = r.rank;
  doc["longrun"] = {{"slope", r.longrun_slope}, {"intercept", r.longrun_intercept}};
  doc["equation_y"] = equation_json(r.eq_y);
  doc["equation_z"] = equation_json(r.eq_z);
  doc["n_obs_effective"] = r.n_obs_effective;
  doc["johansen"] = johansen_json(r.johansen);
  return doc;
}

ordered_json block_json(const ck::BlockTest& r) {
  return {{"test", "lag_block_f"},
          {"statistic", r.statistic},
          {"p_value", r.p_value},
          {"df1", r.df1},
          {"df2", r.df2}};
}

ordered_json diag_json(const ck::DiagnosticResult& r) {
  const char* name = r.test == ck::DiagnosticTest::serial_correlation ? "breusch_godfrey"
                     : r.test == ck::DiagnosticTest::normality ? "jarque_bera"
                                                               : "arch_lm";
  ordered_json doc;
  doc["test"] = name;
  doc["statistic"] = r.statistic;
  doc["p_value"] = r.p_value;
  if (r.lags > 0) doc["lags"] = r.lags;
  doc["n_obs"] = r.n_obs;
  return doc;
}

}  // namespace cli
