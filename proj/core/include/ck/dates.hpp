// Calendar dates stored as a day count since 1970-01-01. The models only use
// ordering and equality; elapsed model time is carried separately as a dt in
// years, so no day-count convention is baked in here.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ck {

class Date {
 public:
  Date() = default;
  explicit Date(std::int64_t days) : days_(days) {}

  static Date from_ymd(int year, int month, int day);
  // Strict ISO-8601 "YYYY-MM-DD"; rejects impossible dates (2021-02-30).
  static Date parse_iso(std::string_view text);

  std::int64_t days() const noexcept { return days_; }
  std::string to_iso() const;

  // 0 = Sunday ... 6 = Saturday.
  int weekday() const noexcept;
  bool is_weekend() const noexcept;
  // Next calendar day that falls Monday..Friday.
  Date next_weekday() const;

  auto operator<=>(const Date&) const = default;

 private:
  std::int64_t days_ = 0;
};

}  // namespace ck
