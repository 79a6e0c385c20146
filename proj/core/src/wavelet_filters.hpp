#pragma once

#include <span>

namespace parma::detail {

/// Orthonormal scaling (low-pass) filter g with sum g = sqrt(2).
///
/// 1 vanishing moment is Haar; 2..10 are the least asymmetric Daubechies filters.
std::span<const double> scaling_filter(int vanishing_moments);

}  // namespace parma::detail
