#include "ck/dates.hpp"

#include <cstdio>

#include "ck/errors.hpp"

namespace ck {
namespace {

// Proleptic Gregorian <-> day count, epoch 1970-01-01 (Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                       static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = static_cast<int>(yr + (m <= 2));
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return !s.empty();
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
  if (month < 1 || month > 12 || day < 1 || day > 31)
    fail(errc::unparsable_date, "no such calendar date");
  Date result(days_from_civil(year, month, day));
  int y, m, d;
  civil_from_days(result.days_, y, m, d);
  if (y != year || m != month || d != day)
    fail(errc::unparsable_date, "no such calendar date");
  return result;
}

Date Date::parse_iso(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
      !all_digits(text.substr(8, 2)))
    fail(errc::unparsable_date, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  return from_ymd(num(0, 4), num(5, 2), num(8, 2));
}

std::string Date::to_iso() const {
  int y, m, d;
  civil_from_days(days_, y, m, d);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
  return buf;
}

int Date::weekday() const noexcept {
  // 1970-01-01 was a Thursday.
  std::int64_t z = (days_ + 4) % 7;
  return static_cast<int>(z < 0 ? z + 7 : z);
}

bool Date::is_weekend() const noexcept {
  const int w = weekday();
  return w == 0 || w == 6;
}

Date Date::next_weekday() const {
  Date d(days_ + 1);
  while (d.is_weekend()) d = Date(d.days_ + 1);
  return d;
}

}  // namespace ck
