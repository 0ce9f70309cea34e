// Thin wrappers over reference distribution functions so the econometrics
// code never hand-rolls tail probabilities.
#pragma once

#include <cstddef>
#include <vector>

namespace ck {

double normal_cdf(double x);
double normal_quantile(double p);         // throws OutOfDomain unless 0 < p < 1
double chi_squared_sf(double x, double dof);
double f_sf(double x, double dof1, double dof2);

// Mean / median / standard error of the mean over a nonempty sample.
double mean_of(const std::vector<double>& x);
double median_of(std::vector<double> x);  // by value: partial-sorts a copy
double std_error_of(const std::vector<double>& x);

}  // namespace ck
