#include <cstdint>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "ck/synthetic.hpp"
#include "common.hpp"

namespace cli {
namespace {

struct GbmOpts {
  double x0 = 2500.0, mu = 0.05, sigma = 0.15, dt = ck::kTradingDt;
  std::size_t n = 504;
  std::uint64_t seed = 0;
  std::string out;
};

struct PairOpts {
  double slope = 0.2, intercept = 1.0, rho = 0.9, sigma_u = 0.05, sigma_z = 1.0;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::string out_y, out_z;
};

struct SentimentOpts {
  std::string index, out;
  double q = 0.28, beta = 6.05, delta = 0.143, alpha = 0.0;
  double s0 = -1.0;  // negative: first index value
  double noise_sigma = 0.0, dt = ck::kTradingDt;
  std::uint64_t seed = 0;
};

}  // namespace

void register_synth(CLI::App& app) {
  auto* synth = app.add_subcommand("synth", "generate seeded synthetic series");
  synth->require_subcommand(1);

  auto gbm = std::make_shared<GbmOpts>();
  auto* cmd_gbm = synth->add_subcommand("gbm", "geometric Brownian motion index");
  cmd_gbm->add_option("--x0", gbm->x0, "initial level");
  cmd_gbm->add_option("--mu", gbm->mu, "annual drift");
  cmd_gbm->add_option("--sigma", gbm->sigma, "annual volatility");
  cmd_gbm->add_option("--n", gbm->n, "number of observations");
  cmd_gbm->add_option("--dt", gbm->dt, "year fraction per observation");
  cmd_gbm->add_option("--seed", gbm->seed, "generator seed");
  cmd_gbm->add_option("--out", gbm->out, "output CSV path")->required();
  cmd_gbm->callback([gbm] {
    ck::save_csv(ck::synth_gbm(gbm->x0, gbm->mu, gbm->sigma, gbm->n, gbm->dt, gbm->seed),
                 gbm->out, "value");
  });

  auto pair = std::make_shared<PairOpts>();
  auto* cmd_pair = synth->add_subcommand("pair", "cointegrated level pair");
  cmd_pair->add_option("--slope", pair->slope, "long-run slope");
  cmd_pair->add_option("--intercept", pair->intercept, "long-run intercept");
  cmd_pair->add_option("--rho", pair->rho, "disturbance AR(1) coefficient");
  cmd_pair->add_option("--sigma-u", pair->sigma_u, "disturbance innovation sd");
  cmd_pair->add_option("--sigma-z", pair->sigma_z, "random-walk innovation sd");
  cmd_pair->add_option("--n", pair->n, "number of observations");
  cmd_pair->add_option("--seed", pair->seed, "generator seed");
  cmd_pair->add_option("--out-y", pair->out_y, "output CSV for y")->required();
  cmd_pair->add_option("--out-z", pair->out_z, "output CSV for z")->required();
  cmd_pair->callback([pair] {
    const ck::CointegratedPair cp = ck::synth_cointegrated_pair(
        pair->slope, pair->intercept, pair->rho, pair->sigma_u, pair->sigma_z,
        pair->n, pair->seed);
    ck::save_csv(cp.y, pair->out_y, "value");
    ck::save_csv(cp.z, pair->out_z, "value");
  });

  auto sent = std::make_shared<SentimentOpts>();
  auto* cmd_sent = synth->add_subcommand(
      "sentiment", "mean sentiment driven by an index file, plus noise");
  cmd_sent->add_option("--index", sent->index, "index CSV")->required();
  cmd_sent->add_option("--q", sent->q, "interaction strength");
  cmd_sent->add_option("--beta", sent->beta, "interaction rate");
  cmd_sent->add_option("--delta", sent->delta, "index markup");
  cmd_sent->add_option("--alpha", sent->alpha, "self-relaxation rate");
  cmd_sent->add_option("--s0", sent->s0, "initial sentiment (default: first index value)");
  cmd_sent->add_option("--noise-sigma", sent->noise_sigma, "observation noise sd");
  cmd_sent->add_option("--dt", sent->dt, "year fraction per observation");
  cmd_sent->add_option("--seed", sent->seed, "generator seed");
  cmd_sent->add_option("--out", sent->out, "output CSV path")->required();
  cmd_sent->callback([sent] {
    const ck::TimeSeries index = load_series(sent->index, "value", false);
    const double s0 = sent->s0 < 0.0 ? index.value(0) : sent->s0;
    const ck::KineticParams p{sent->q, sent->beta, sent->delta, sent->alpha};
    ck::save_csv(ck::synth_sentiment(p, index, s0, sent->noise_sigma, sent->seed, sent->dt),
                 sent->out, "value");
  });
}

}  // namespace cli
