// Error taxonomy shared by every module: one exception type carrying a stable
// code so callers (and the CLI exit mapping) can dispatch without parsing text.
#pragma once

#include <stdexcept>
#include <string>

namespace ck {

enum class errc {
  // ingestion and series construction
  missing_column,
  unparsable_date,
  non_monotone_dates,
  non_finite_value,
  non_positive_value,
  series_too_short,
  empty_series,
  empty_intersection,
  boundary_out_of_range,
  // configuration
  invalid_parameter,
  invalid_budget,
  // statistical degeneracy
  rank_deficient,
  too_few_observations,
  constant_series,
  degenerate_residuals,
  zero_denominator,
  out_of_domain,
  // numerical
  numerical_failure,
  not_converged,
  grid_too_coarse,
  path_too_short,
  invalid_time_step,
  empty_ensemble,
};

const char* errc_name(errc code);

// Failure classes the CLI maps onto process exit codes.
enum class error_class {
  usage = 1,            // bad flags or parameter values
  degenerate_data = 2,  // input that no estimator can do anything with
  non_convergence = 3,  // iteration budgets exhausted, singular linear algebra
};

error_class classify(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& detail);

}  // namespace ck
