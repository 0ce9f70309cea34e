// Out-of-sample scoring and the report bundle: error statistics against hand
// values, the long-run baseline, and the report's schema contract.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/engle_granger.hpp"
#include "ck/errors.hpp"
#include "ck/evaluation.hpp"
#include "ck/synthetic.hpp"
#include "ck/timeseries.hpp"

namespace {

ck::TimeSeries series_of(std::initializer_list<double> values) {
  std::vector<double> v(values);
  return ck::TimeSeries(ck::weekday_dates(ck::Date::from_ymd(2021, 1, 4), v.size()),
                        v);
}

}  // namespace

TEST_CASE("error summary hand values", "[evaluation]") {
  const ck::ErrorSummary s = ck::error_summary(series_of({0.01, 0.02, 0.03}));
  CHECK(s.mean == Catch::Approx(0.02).margin(1e-15));
  CHECK(s.median == Catch::Approx(0.02).margin(1e-15));
  CHECK(s.std_error == Catch::Approx(0.005774).margin(1e-6));
  CHECK(s.max_abs == Catch::Approx(0.03).margin(1e-15));
  CHECK(s.n == 3);

  // Even length: median averages the middle pair.
  const ck::ErrorSummary e = ck::error_summary(series_of({0.04, 0.01, 0.02, 0.03}));
  CHECK(e.median == Catch::Approx(0.025).margin(1e-15));
}

TEST_CASE("relative errors align on common dates", "[evaluation]") {
  const ck::TimeSeries forecast = series_of({110.0, 95.0, 105.0});
  const ck::TimeSeries measured = series_of({100.0, 100.0, 100.0});
  const ck::TimeSeries err = ck::relative_error_series(forecast, measured);
  REQUIRE(err.size() == 3);
  CHECK(err.value(0) == Catch::Approx(0.10).margin(1e-12));
  CHECK(err.value(1) == Catch::Approx(0.05).margin(1e-12));

  const ck::TimeSeries zero = series_of({100.0, 0.0, 100.0});
  CHECK_THROWS_AS(ck::relative_error_series(forecast, zero), ck::Error);
}

TEST_CASE("baseline applies the long-run line to new forcing", "[evaluation]") {
  const ck::CointegratedPair pair =
      ck::synth_cointegrated_pair(1.1, 5.0, 0.5, 1.0, 1.0, 800, 31);
  const ck::EngleGrangerResult eg = ck::engle_granger(pair.y, pair.z);
  const ck::TimeSeries base = ck::baseline_cointegration_forecast(eg, pair.z);
  REQUIRE(base.size() == pair.z.size());
  for (std::size_t i : {std::size_t{0}, base.size() - 1}) {
    const double expect =
        eg.longrun_intercept + eg.longrun_slope * pair.z.value(i);
    CHECK(base.value(i) == Catch::Approx(expect).margin(1e-12));
  }
}

TEST_CASE("report bundle schema and files", "[evaluation][io]") {
  const std::string dir = "ck_test_report_dir";
  const ck::TimeSeries forecast = series_of({2400.0, 2410.0, 2430.0, 2450.0});
  const ck::TimeSeries measured = series_of({2380.0, 2400.0, 2440.0, 2455.0});
  const ck::TimeSeries baseline = series_of({2300.0, 2310.0, 2320.0, 2330.0});

  ck::CalibrationResult calib;
  calib.params = {0.28, 6.05, 0.143, 0.0};
  calib.k = 1.694;
  calib.delta = 0.143;
  calib.objective = 12.5;
  calib.converged = true;

  SECTION("with baseline") {
    const ck::ReportBundle bundle =
        ck::write_report(dir, calib, forecast, measured, baseline);
    REQUIRE(bundle.files.size() == 5);
    CHECK(std::filesystem::path(bundle.files[0]).filename() == "report.json");
    for (const auto& f : bundle.files) CHECK(std::filesystem::exists(f));

    const auto& doc = bundle.document;
    CHECK(doc["params"]["q"].get<double>() == 0.28);
    CHECK(doc["params"]["beta"].get<double>() == 6.05);
    CHECK(doc["params"]["delta"].get<double>() == 0.143);
    CHECK(doc["params"]["k"].get<double>() == 1.694);
    CHECK(doc["model_errors"]["n"].get<std::size_t>() == 4);
    CHECK(doc["model_errors"]["mean"].get<double>() > 0.0);
    CHECK(doc["baseline_errors"]["mean"].get<double>() >
          doc["model_errors"]["mean"].get<double>());
    // files[] names every CSV written next to the report.
    CHECK(doc["files"].size() == 5);

    // The written report parses back to the same document.
    std::ifstream in(bundle.files[0]);
    nlohmann::ordered_json disk;
    in >> disk;
    CHECK(disk == doc);
  }
  SECTION("without baseline") {
    const ck::ReportBundle bundle =
        ck::write_report(dir, calib, forecast, measured, std::nullopt);
    CHECK(bundle.document["baseline_errors"].is_null());
    CHECK(bundle.files.size() == 3);
  }
  std::filesystem::remove_all(dir);
}
