// Dated scalar series and the transforms the cointegration pipeline needs.
// Class invariants: dates strictly increasing, every value finite, length >= 1.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ck/dates.hpp"

namespace ck {

class TimeSeries {
 public:
  // Validates the invariants; throws NonMonotoneDates / NonFiniteValue /
  // EmptySeries / InvalidParameter on violation.
  TimeSeries(std::vector<Date> dates, std::vector<double> values,
             std::string label = "");

  const std::vector<Date>& dates() const noexcept { return dates_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }

  std::size_t size() const noexcept { return values_.size(); }
  Date date(std::size_t i) const { return dates_[i]; }
  double value(std::size_t i) const { return values_[i]; }
  Date front_date() const { return dates_.front(); }
  Date back_date() const { return dates_.back(); }

 private:
  std::vector<Date> dates_;
  std::vector<double> values_;
  std::string label_;
};

struct SplitSpec {
  Date boundary;  // last date of the training segment (inclusive)
};

// CSV with a header naming at least `date_col` and `value_col`; dates ISO-8601.
TimeSeries load_csv(const std::string& path, const std::string& date_col = "date",
                    const std::string& value_col = "value");
// Empty value_col means: the series label if set, else "value".
void save_csv(const TimeSeries& ts, const std::string& path,
              const std::string& value_col = "");

// Elementwise natural log; requires strictly positive values.
TimeSeries log_series(const TimeSeries& ts);
// Differences at `lag` (drops the first `lag` observations).
TimeSeries diff_series(const TimeSeries& ts, std::size_t lag = 1);
// Restriction of both series to their common dates, in date order.
std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b);
// Train/test split at the boundary date; both segments must be nonempty.
std::pair<TimeSeries, TimeSeries> split(const TimeSeries& ts, const SplitSpec& spec);

}  // namespace ck
