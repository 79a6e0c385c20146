#pragma once

#include <cstddef>

namespace parma::stats {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal upper tail P(Z > x).
double normal_sf(double x);

/// Inverse standard normal CDF (Wichura's AS 241, relative error ~1e-16).
///
/// Requires 0 < p < 1.
double normal_quantile(double p);

/// Upper tail P(X > x) for X ~ chi-square(dof).
double chi_square_sf(double x, std::size_t dof);

/// Upper tail of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_sf(double lambda);

}  // namespace parma::stats
