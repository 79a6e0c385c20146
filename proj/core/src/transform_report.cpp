#include "parma/transform_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coefficient_test.hpp"
#include "parma/stats.hpp"

namespace parma {

std::string to_string(TransformKind kind) { return kind == TransformKind::Fourier ? "fourier" : "wavelet"; }

std::size_t TransformReport::retained_count() const {
    return static_cast<std::size_t>(
        std::count_if(coefficients.begin(), coefficients.end(), [](const CoefficientTest& c) { return c.retained; }));
}

std::size_t TransformReport::significant_count() const {
    return static_cast<std::size_t>(std::count_if(coefficients.begin(), coefficients.end(),
                                                  [](const CoefficientTest& c) { return c.significant; }));
}

double bonferroni_threshold(double alpha, std::size_t length) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("bonferroni_threshold: alpha must lie in (0, 1)");
    }
    if (length < 2) {
        throw std::invalid_argument("bonferroni_threshold: need at least one tested coefficient");
    }
    const double alpha_star = alpha / static_cast<double>(length - 1);
    return stats::normal_quantile(1.0 - alpha_star / 2.0);
}

namespace detail {

void test_coefficients(TransformReport& report, std::span<const double> values, const Matrix& r,
                       const std::function<std::string(std::size_t)>& label) {
    const std::size_t n = values.size();
    const double cycles = static_cast<double>(report.cycles);
    report.threshold = bonferroni_threshold(report.alpha, n);
    report.coefficients.clear();
    report.compressed_coefficients.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double var = r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        CoefficientTest row;
        row.index = i;
        row.label = label(i);
        row.value = values[i];
        row.tested = i != 0;
        if (row.tested && !(var > 0.0)) {
            throw numerical_error("ZeroTransformedVariance",
                                  "coefficient " + row.label + " has zero asymptotic variance");
        }
        row.se = std::sqrt(std::max(var, 0.0) / cycles);
        row.z = row.se > 0.0 ? values[i] / row.se : 0.0;
        row.significant = row.tested && std::abs(row.z) > report.threshold;
        row.retained = !row.tested || row.significant;
        if (row.retained) {
            report.compressed_coefficients[i] = values[i];
        }
        report.coefficients.push_back(std::move(row));
    }
}

}  // namespace detail
}  // namespace parma
