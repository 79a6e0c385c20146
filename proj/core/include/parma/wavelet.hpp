#pragma once

// Orthogonal periodic DWT of seasonal parameter vectors and the wavelet
// coefficient significance test.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "parma/core.hpp"
#include "parma/transform_report.hpp"

namespace parma {

enum class WaveletFamily { Haar, LeastAsymmetric };

struct WaveletSpec {
    WaveletFamily family = WaveletFamily::Haar;
    int vanishing_moments = 1;

    static WaveletSpec haar() { return {WaveletFamily::Haar, 1}; }
    static WaveletSpec least_asymmetric(int vanishing_moments);

    /// Parses "haar" or "la<k>" (k = 1..10).
    static WaveletSpec parse(const std::string& name);

    /// "haar" or "la<k>".
    std::string name() const;

    /// Scaling filter coefficients g_0 .. g_{L-1}.
    std::span<const double> scaling_filter() const;

    friend bool operator==(const WaveletSpec&, const WaveletSpec&) = default;
};

/// Full-depth periodic DWT matrix for a power-of-two `length` >= 2.
///
/// Rows are ordered [V_J, W_1, W_2 (2 rows), ..., W_J (length/2 rows)], coarsest
/// detail block first. Matrices are cached per (spec, length); the returned
/// reference stays valid for the life of the program.
const Matrix& dwt_matrix(const WaveletSpec& spec, std::size_t length);

struct DwtCoeffs {
    std::vector<double> values;
    std::size_t length = 0;
    std::size_t levels = 0;  // J = log2(length)

    /// First index and size of detail block W_j, j = 1..levels.
    std::pair<std::size_t, std::size_t> block(std::size_t j) const;
};

DwtCoeffs to_dwt(std::span<const double> x, const WaveletSpec& spec);
std::vector<double> from_dwt(const DwtCoeffs& w, const WaveletSpec& spec);

/// R_W = W Sigma W' for a covariance already extended to a power of two.
CovMatrix dwt_cov(const CovMatrix& sigma, const WaveletSpec& spec);

/// Label of coefficient `index` in the DWT layout ("V", "W1.0", "W2.1", ...).
std::string dwt_label(std::size_t index);

/// Wavelet Bonferroni test of one seasonal parameter vector.
///
/// The estimate and its covariance are periodically extended to the next power
/// of two nu'; W_1 .. W_{nu'-1} are tested at size alpha / (nu' - 1) and W_0 is
/// always kept. The compressed vector is reconstructed and truncated to nu.
TransformReport wavelet_test(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles, double alpha,
                             const WaveletSpec& spec);

}  // namespace parma
