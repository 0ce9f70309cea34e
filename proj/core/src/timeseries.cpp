#include "ck/timeseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ck/errors.hpp"

namespace ck {
namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trimmed(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_value(const std::string& token, const std::string& path, std::size_t row) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    fail(errc::non_finite_value,
         path + ": row " + std::to_string(row) + " value '" + token + "'");
  return v;
}

std::string format_value(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

TimeSeries::TimeSeries(std::vector<Date> dates, std::vector<double> values,
                       std::string label)
    : dates_(std::move(dates)), values_(std::move(values)), label_(std::move(label)) {
  if (dates_.size() != values_.size())
    fail(errc::invalid_parameter, "dates and values differ in length");
  if (values_.empty()) fail(errc::empty_series, "series has no observations");
  for (std::size_t i = 1; i < dates_.size(); ++i)
    if (!(dates_[i - 1] < dates_[i]))
      fail(errc::non_monotone_dates,
           "dates not strictly increasing at " + dates_[i].to_iso());
  for (double v : values_)
    if (!std::isfinite(v)) fail(errc::non_finite_value, "non-finite observation");
}

TimeSeries load_csv(const std::string& path, const std::string& date_col,
                    const std::string& value_col) {
  std::ifstream in(path);
  if (!in) fail(errc::missing_column, "cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) fail(errc::empty_series, path + ": empty file");
  const auto header = split_row(line);
  auto find_col = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end())
      fail(errc::missing_column, path + ": no column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t date_ix = find_col(date_col);
  const std::size_t value_ix = find_col(value_col);

  std::vector<Date> dates;
  std::vector<double> values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trimmed(line).empty()) continue;
    const auto fields = split_row(line);
    if (fields.size() <= std::max(date_ix, value_ix))
      fail(errc::missing_column, path + ": row " + std::to_string(row) + " too short");
    dates.push_back(Date::parse_iso(fields[date_ix]));
    values.push_back(parse_value(fields[value_ix], path, row));
  }
  if (values.empty()) fail(errc::empty_series, path + ": no data rows");
  return TimeSeries(std::move(dates), std::move(values), value_col);
}

void save_csv(const TimeSeries& ts, const std::string& path,
              const std::string& value_col) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_parameter, "cannot write '" + path + "'");
  const std::string name =
      !value_col.empty() ? value_col : (!ts.label().empty() ? ts.label() : "value");
  out << "date," << name << "\n";
  for (std::size_t i = 0; i < ts.size(); ++i)
    out << ts.date(i).to_iso() << "," << format_value(ts.value(i)) << "\n";
  if (!out) fail(errc::invalid_parameter, "short write to '" + path + "'");
}

TimeSeries log_series(const TimeSeries& ts) {
  std::vector<double> out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts.value(i) > 0.0))
      fail(errc::non_positive_value,
           "log of non-positive value at " + ts.date(i).to_iso());
    out[i] = std::log(ts.value(i));
  }
  return TimeSeries(ts.dates(), std::move(out), ts.label());
}

TimeSeries diff_series(const TimeSeries& ts, std::size_t lag) {
  if (lag == 0) fail(errc::invalid_parameter, "difference lag must be positive");
  if (ts.size() <= lag)
    fail(errc::series_too_short, "need more than " + std::to_string(lag) +
                                     " observations to difference");
  std::vector<Date> dates(ts.dates().begin() + static_cast<std::ptrdiff_t>(lag),
                          ts.dates().end());
  std::vector<double> out(ts.size() - lag);
  for (std::size_t i = lag; i < ts.size(); ++i)
    out[i - lag] = ts.value(i) - ts.value(i - lag);
  return TimeSeries(std::move(dates), std::move(out), ts.label());
}

std::pair<TimeSeries, TimeSeries> align(const TimeSeries& a, const TimeSeries& b) {
  std::vector<Date> dates;
  std::vector<double> va, vb;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.date(i) < b.date(j)) {
      ++i;
    } else if (b.date(j) < a.date(i)) {
      ++j;
    } else {
      dates.push_back(a.date(i));
      va.push_back(a.value(i));
      vb.push_back(b.value(j));
      ++i;
      ++j;
    }
  }
  if (dates.empty()) fail(errc::empty_intersection, "series share no dates");
  return {TimeSeries(dates, std::move(va), a.label()),
          TimeSeries(std::move(dates), std::move(vb), b.label())};
}

std::pair<TimeSeries, TimeSeries> split(const TimeSeries& ts, const SplitSpec& spec) {
  const auto& d = ts.dates();
  auto cut = std::upper_bound(d.begin(), d.end(), spec.boundary);
  const std::size_t n_train = static_cast<std::size_t>(cut - d.begin());
  if (n_train == 0 || n_train == ts.size())
    fail(errc::boundary_out_of_range,
         "boundary " + spec.boundary.to_iso() + " leaves an empty segment");
  std::vector<Date> d1(d.begin(), cut), d2(cut, d.end());
  std::vector<double> v1(ts.values().begin(),
                         ts.values().begin() + static_cast<std::ptrdiff_t>(n_train));
  std::vector<double> v2(ts.values().begin() + static_cast<std::ptrdiff_t>(n_train),
                         ts.values().end());
  return {TimeSeries(std::move(d1), std::move(v1), ts.label()),
          TimeSeries(std::move(d2), std::move(v2), ts.label())};
}

}  // namespace ck
