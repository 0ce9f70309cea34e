#include "ck/evaluation.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ck/errors.hpp"
#include "ck/stats.hpp"

namespace ck {

TimeSeries relative_error_series(const TimeSeries& forecast,
                                 const TimeSeries& measured) {
  auto [fa, ma] = align(forecast, measured);
  std::vector<double> err(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (ma.value(i) == 0.0)
      fail(errc::zero_denominator,
           "measured value is zero at " + ma.date(i).to_iso());
    err[i] = std::abs(fa.value(i) - ma.value(i)) / std::abs(ma.value(i));
  }
  return TimeSeries(fa.dates(), std::move(err), "relative_error");
}

ErrorSummary error_summary(const TimeSeries& errors) {
  const auto& v = errors.values();
  ErrorSummary s;
  s.n = v.size();
  s.mean = mean_of(v);
  s.median = median_of(v);
  s.std_error = v.size() > 1 ? std_error_of(v) : 0.0;
  for (double e : v) s.max_abs = std::max(s.max_abs, std::abs(e));
  return s;
}

TimeSeries baseline_cointegration_forecast(const EngleGrangerResult& eg,
                                           const TimeSeries& X) {
  std::vector<double> v(X.size());
  for (std::size_t i = 0; i < X.size(); ++i)
    v[i] = eg.longrun_intercept + eg.longrun_slope * X.value(i);
  return TimeSeries(X.dates(), std::move(v), "baseline");
}

namespace {

nlohmann::ordered_json summary_json(const ErrorSummary& s) {
  return {{"mean", s.mean},
          {"median", s.median},
          {"std_error", s.std_error},
          {"max_abs", s.max_abs},
          {"n", s.n}};
}

}  // namespace

ReportBundle write_report(const std::string& out_dir, const CalibrationResult& calib,
                          const TimeSeries& forecast, const TimeSeries& measured,
                          const std::optional<TimeSeries>& baseline) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(errc::invalid_parameter, "cannot create '" + out_dir + "'");

  const TimeSeries model_err = relative_error_series(forecast, measured);
  const ErrorSummary model_sum = error_summary(model_err);

  ReportBundle bundle;
  auto& doc = bundle.document;
  doc["params"] = {{"q", calib.params.q},
                   {"beta", calib.params.beta},
                   {"delta", calib.params.delta},
                   {"alpha", calib.params.alpha},
                   {"k", calib.k}};
  doc["objective"] = calib.objective;
  doc["model_errors"] = summary_json(model_sum);

  auto emit = [&](const TimeSeries& ts, const std::string& name) {
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    save_csv(ts, path);
    bundle.files.push_back(path);
  };

  const std::string report_path =
      (std::filesystem::path(out_dir) / "report.json").string();
  bundle.files.push_back(report_path);
  emit(forecast, "forecast.csv");
  emit(model_err, "model_errors.csv");
  if (baseline) {
    const TimeSeries base_err = relative_error_series(*baseline, measured);
    doc["baseline_errors"] = summary_json(error_summary(base_err));
    emit(*baseline, "baseline.csv");
    emit(base_err, "baseline_errors.csv");
  } else {
    doc["baseline_errors"] = nullptr;
  }
  doc["files"] = bundle.files;

  std::ofstream out(report_path);
  if (!out) fail(errc::invalid_parameter, "cannot write '" + report_path + "'");
  out << doc.dump(2) << "\n";
  return bundle;
}

}  // namespace ck
