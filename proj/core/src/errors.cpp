#include "ck/errors.hpp"

namespace ck {

const char* errc_name(errc code) {
  switch (code) {
    case errc::missing_column: return "MissingColumn";
    case errc::unparsable_date: return "UnparsableDate";
    case errc::non_monotone_dates: return "NonMonotoneDates";
    case errc::non_finite_value: return "NonFiniteValue";
    case errc::non_positive_value: return "NonPositiveValue";
    case errc::series_too_short: return "SeriesTooShort";
    case errc::empty_series: return "EmptySeries";
    case errc::empty_intersection: return "EmptyIntersection";
    case errc::boundary_out_of_range: return "BoundaryOutOfRange";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::invalid_budget: return "InvalidBudget";
    case errc::rank_deficient: return "RankDeficient";
    case errc::too_few_observations: return "TooFewObservations";
    case errc::constant_series: return "ConstantSeries";
    case errc::degenerate_residuals: return "DegenerateResiduals";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::numerical_failure: return "NumericalFailure";
    case errc::not_converged: return "NotConverged";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::path_too_short: return "PathTooShort";
    case errc::invalid_time_step: return "InvalidTimeStep";
    case errc::empty_ensemble: return "EmptyEnsemble";
  }
  return "UnknownError";
}

error_class classify(errc code) {
  switch (code) {
    case errc::invalid_parameter:
    case errc::invalid_budget:
      return error_class::usage;
    case errc::numerical_failure:
    case errc::not_converged:
      return error_class::non_convergence;
    default:
      return error_class::degenerate_data;
  }
}

void fail(errc code, const std::string& detail) {
  throw Error(code, std::string(errc_name(code)) + ": " + detail);
}

}  // namespace ck
