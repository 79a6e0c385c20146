#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "parma/transform_report.hpp"

namespace parma::detail {

/// Fills coefficient rows and the compressed vector for coefficients `values`
/// with covariance `r` (already transformed); index 0 is kept untested.
void test_coefficients(TransformReport& report, std::span<const double> values, const Matrix& r,
                       const std::function<std::string(std::size_t)>& label);

}  // namespace parma::detail
