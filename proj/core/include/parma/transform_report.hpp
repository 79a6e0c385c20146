#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parma/core.hpp"

namespace parma {

enum class TransformKind { Fourier, Wavelet };

std::string to_string(TransformKind kind);

/// One row of a coefficient significance table.
struct CoefficientTest {
    std::size_t index = 0;
    std::string label;  // "c0", "s1", ... or "V", "W1.0", ...
    double value = 0.0;
    double se = 0.0;    // sqrt(R_ii / N)
    double z = 0.0;
    bool tested = false;  // the scaling / mean coefficient is never tested
    bool significant = false;
    bool retained = false;
};

/// Significance test of the transform coefficients of one seasonal parameter vector.
struct TransformReport {
    TransformKind transform = TransformKind::Wavelet;
    std::string basis;  // "fourier", "haar", "la7", ...
    ParameterRole role = ParameterRole::Phi;
    std::size_t period = 0;            // nu
    std::size_t transform_length = 0;  // nu' (== nu for Fourier)
    std::size_t cycles = 0;
    double alpha = 0.05;
    double threshold = 0.0;  // Bonferroni critical value
    std::vector<CoefficientTest> coefficients;
    std::vector<double> compressed_coefficients;  // insignificant entries zeroed
    std::vector<double> reconstructed;            // inverse transform, truncated to nu

    std::size_t retained_count() const;
    std::size_t significant_count() const;
};

}  // namespace parma

namespace parma {

/// Two-sided Bonferroni critical value z_{alpha*/2} with alpha* = alpha / (length - 1).
///
/// `length` counts the scaling / mean coefficient, which is not tested.
double bonferroni_threshold(double alpha, std::size_t length);

}  // namespace parma
