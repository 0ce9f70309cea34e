// Dates, series invariants, CSV ingestion, and the alignment/split transforms
// the pipeline depends on. CSV cases go through real temp files because the
// parser's error paths (missing column, garbage values) are contract, not
// incidental.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ck/dates.hpp"
#include "ck/errors.hpp"
#include "ck/timeseries.hpp"

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "ck_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

ck::TimeSeries make_series(std::initializer_list<double> values) {
  std::vector<ck::Date> dates;
  std::vector<double> v(values);
  ck::Date d = ck::Date::from_ymd(2020, 1, 6);
  for (std::size_t i = 0; i < v.size(); ++i) {
    dates.push_back(d);
    d = d.next_weekday();
  }
  return ck::TimeSeries(std::move(dates), std::move(v));
}

}  // namespace

TEST_CASE("date parsing and arithmetic", "[dates]") {
  const ck::Date d = ck::Date::parse_iso("2021-03-01");
  CHECK(d.to_iso() == "2021-03-01");
  CHECK(d == ck::Date::from_ymd(2021, 3, 1));
  CHECK(ck::Date::parse_iso("1970-01-01").days() == 0);
  CHECK(ck::Date::parse_iso("1970-01-02").days() == 1);

  // 2021-03-01 was a Monday.
  CHECK(d.weekday() == 1);
  CHECK_FALSE(d.is_weekend());
  const ck::Date fri = ck::Date::parse_iso("2021-03-05");
  CHECK(fri.next_weekday() == ck::Date::parse_iso("2021-03-08"));

  CHECK_THROWS_AS(ck::Date::parse_iso("2021-02-30"), ck::Error);
  CHECK_THROWS_AS(ck::Date::parse_iso("2021/03/01"), ck::Error);
  CHECK_THROWS_AS(ck::Date::parse_iso("21-03-01"), ck::Error);
  CHECK_THROWS_AS(ck::Date::parse_iso("2021-13-01"), ck::Error);
}

TEST_CASE("series invariants are enforced at construction", "[timeseries]") {
  const auto d = [](int day) { return ck::Date::from_ymd(2020, 1, day); };

  CHECK_THROWS_AS(ck::TimeSeries({}, {}), ck::Error);
  CHECK_THROWS_AS(ck::TimeSeries({d(2), d(1)}, {1.0, 2.0}), ck::Error);
  CHECK_THROWS_AS(ck::TimeSeries({d(1), d(1)}, {1.0, 2.0}), ck::Error);
  CHECK_THROWS_AS(ck::TimeSeries({d(1), d(2)}, {1.0, std::nan("")}), ck::Error);
  CHECK_THROWS_AS(ck::TimeSeries({d(1)}, {1.0, 2.0}), ck::Error);

  const ck::TimeSeries ts({d(1), d(2)}, {1.0, 2.0}, "px");
  CHECK(ts.size() == 2);
  CHECK(ts.label() == "px");
  CHECK(ts.value(1) == 2.0);
}

TEST_CASE("csv loads by header name and rejects malformed input", "[timeseries][csv]") {
  const std::string good = write_temp("good.csv",
      "date,close,value\n"
      "2020-01-01,9.0,1.5\n"
      "2020-01-02,9.5,2.5\r\n"
      "2020-01-03,10.0,3.5\n");
  const ck::TimeSeries ts = ck::load_csv(good, "date", "value");
  REQUIRE(ts.size() == 3);
  CHECK(ts.value(1) == 2.5);  // CRLF line must parse identically
  const ck::TimeSeries close = ck::load_csv(good, "date", "close");
  CHECK(close.value(2) == 10.0);

  SECTION("missing column") {
    CHECK_THROWS_WITH(ck::load_csv(good, "date", "volume"),
                      Catch::Matchers::ContainsSubstring("volume"));
  }
  SECTION("unparsable value") {
    const std::string bad = write_temp("badval.csv",
        "date,value\n2020-01-01,12.x\n");
    CHECK_THROWS_AS(ck::load_csv(bad, "date", "value"), ck::Error);
    std::remove(bad.c_str());
  }
  SECTION("nan literal is rejected like any non-finite value") {
    const std::string bad = write_temp("nan.csv",
        "date,value\n2020-01-01,nan\n");
    CHECK_THROWS_AS(ck::load_csv(bad, "date", "value"), ck::Error);
    std::remove(bad.c_str());
  }
  SECTION("out-of-order dates") {
    const std::string bad = write_temp("order.csv",
        "date,value\n2020-01-02,1\n2020-01-01,2\n");
    CHECK_THROWS_AS(ck::load_csv(bad, "date", "value"), ck::Error);
    std::remove(bad.c_str());
  }
  std::remove(good.c_str());
}

TEST_CASE("csv round-trips values exactly", "[timeseries][csv]") {
  std::vector<ck::Date> dates;
  std::vector<double> values;
  ck::Date d = ck::Date::from_ymd(2020, 1, 6);
  for (int i = 0; i < 50; ++i) {
    dates.push_back(d);
    d = d.next_weekday();
    values.push_back(1000.0 + 0.123456789 * i * i);
  }
  const ck::TimeSeries ts(dates, values, "series");
  const std::string path = write_temp("roundtrip.csv", "");
  ck::save_csv(ts, path, "value");
  const ck::TimeSeries back = ck::load_csv(path, "date", "value");
  REQUIRE(back.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(back.date(i) == ts.date(i));
    CHECK(back.value(i) == ts.value(i));  // shortest round-trip formatting
  }
  std::remove(path.c_str());
}

TEST_CASE("log and diff transforms", "[timeseries]") {
  const ck::TimeSeries ts = make_series({1.0, std::exp(1.0), std::exp(2.0)});
  const ck::TimeSeries lg = ck::log_series(ts);
  CHECK(lg.value(0) == 0.0);
  CHECK(lg.value(2) == Catch::Approx(2.0));

  const ck::TimeSeries d1 = ck::diff_series(make_series({1.0, 3.0, 6.0, 10.0}));
  REQUIRE(d1.size() == 3);
  CHECK(d1.value(0) == 2.0);
  CHECK(d1.value(2) == 4.0);
  // Differenced series keeps the later dates.
  CHECK(d1.date(0) == make_series({1.0, 3.0}).date(1));

  CHECK_THROWS_AS(ck::log_series(make_series({1.0, 0.0, 2.0})), ck::Error);
  CHECK_THROWS_AS(ck::diff_series(make_series({1.0}), 1), ck::Error);
}

TEST_CASE("align restricts to common dates", "[timeseries]") {
  const auto d = [](int day) { return ck::Date::from_ymd(2020, 2, day); };
  const ck::TimeSeries a({d(3), d(4), d(5), d(6)}, {1, 2, 3, 4});
  const ck::TimeSeries b({d(4), d(6), d(7)}, {20, 40, 70});
  const auto [aa, bb] = ck::align(a, b);
  REQUIRE(aa.size() == 2);
  CHECK(aa.value(0) == 2);
  CHECK(bb.value(0) == 20);
  CHECK(aa.date(1) == d(6));

  const ck::TimeSeries c({d(10)}, {1.0});
  CHECK_THROWS_AS(ck::align(a, c), ck::Error);
}

TEST_CASE("split keeps the boundary date in the training segment", "[timeseries]") {
  const ck::TimeSeries ts = make_series({1, 2, 3, 4, 5});
  const auto [train, test] = ck::split(ts, {ts.date(2)});
  CHECK(train.size() == 3);
  CHECK(test.size() == 2);
  CHECK(train.back_date() == ts.date(2));
  CHECK(test.front_date() == ts.date(3));

  // A boundary strictly between observations (the weekend after the fifth
  // weekday) splits the same way.
  const ck::TimeSeries week2 = make_series({1, 2, 3, 4, 5, 6, 7});
  const auto [tr2, te2] = ck::split(week2, {ck::Date(week2.date(4).days() + 1)});
  CHECK(tr2.size() == 5);
  CHECK(te2.size() == 2);

  CHECK_THROWS_AS(ck::split(ts, {ck::Date(ts.date(4).days() + 10)}), ck::Error);
  CHECK_THROWS_AS(ck::split(ts, {ck::Date(ts.date(0).days() - 10)}), ck::Error);
}
