#pragma once

// Residual whiteness and normality checks.

#include <cstddef>
#include <span>
#include <vector>

namespace parma {

struct AcfResult {
    std::vector<double> rho;  // rho[k-1] for k = 1..max_lag
    double band = 0.0;        // 1.96 / sqrt(n)
};

/// Sample autocorrelations at lags 1..max_lag. Throws Error "ZeroVariance" on constant input.
AcfResult acf(std::span<const double> x, std::size_t max_lag);

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Q = n sum_{k<=h} rho_k^2 against chi-square(h), no fitted-parameter correction.
TestResult box_pierce(std::span<const double> x, std::size_t lag);

/// One-sample KS of the standardized input against N(0, 1), asymptotic p-value.
///
/// Uses the sample mean and sd without a Lilliefors correction, so it is anti-conservative.
TestResult ks_normal(std::span<const double> x);

struct Histogram {
    std::vector<double> edges;    // bins + 1
    std::vector<std::size_t> counts;
    std::vector<double> density;  // counts / (n * width)
    std::vector<double> curve_x;  // 200 points over [min, max]
    std::vector<double> curve_pdf;
};

Histogram histogram(std::span<const double> x, std::size_t bins);

}  // namespace parma
