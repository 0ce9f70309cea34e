// Out-of-sample scoring: relative errors of a forecast against the measured
// series, summary statistics, the static long-run regression as a baseline,
// and a machine-readable report bundle.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/calibration.hpp"
#include "ck/engle_granger.hpp"
#include "ck/timeseries.hpp"

namespace ck {

// |forecast - measured| / |measured| on common dates; measured must be
// nonzero everywhere.
TimeSeries relative_error_series(const TimeSeries& forecast,
                                 const TimeSeries& measured);

struct ErrorSummary {
  double mean = 0.0;
  double median = 0.0;
  double std_error = 0.0;  // of the mean
  double max_abs = 0.0;
  std::size_t n = 0;
};

ErrorSummary error_summary(const TimeSeries& errors);

// Fitted long-run line a + b X evaluated on X's dates.
TimeSeries baseline_cointegration_forecast(const EngleGrangerResult& eg,
                                           const TimeSeries& X);

struct ReportBundle {
  nlohmann::ordered_json document;
  std::vector<std::string> files;  // paths written, report.json first
};

// Writes report.json plus forecast/baseline/error CSVs under out_dir
// (created if missing) and returns the document.
ReportBundle write_report(const std::string& out_dir,
                          const CalibrationResult& calib,
                          const TimeSeries& forecast, const TimeSeries& measured,
                          const std::optional<TimeSeries>& baseline);

}  // namespace ck
