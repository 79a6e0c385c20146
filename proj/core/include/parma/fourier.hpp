#pragma once

// Real Fourier coefficients of seasonal parameter vectors, f = L P U x.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "parma/core.hpp"
#include "parma/transform_report.hpp"

namespace parma {

using ComplexMatrix = Eigen::MatrixXcd;

/// Factors of the real Fourier map: L diagonal scaling, P and U unitary.
struct LpuFactors {
    Vector l;  // diagonal of L
    ComplexMatrix p;
    ComplexMatrix u;
};

LpuFactors lpu_matrices(std::size_t period);

/// Real nu x nu matrix G = L P U (imaginary residue checked below 1e-12).
///
/// Row order is c_0, c_1, s_1, c_2, s_2, ... ending in c_{nu/2} for even nu.
Matrix fourier_matrix(std::size_t period);

/// Coefficient label for row `index` of fourier_matrix(period).
std::string fourier_label(std::size_t index, std::size_t period);

struct FourierCoeffs {
    std::vector<double> values;  // [c0, c1, s1, ...]
    std::size_t period = 0;
};

FourierCoeffs to_fourier(const SeasonalVector& x);
FourierCoeffs to_fourier(std::span<const double> x);

/// Inverse map x = U^H P^H L^-1 f evaluated from the factors.
std::vector<double> from_fourier(const FourierCoeffs& f);
SeasonalVector from_fourier(const FourierCoeffs& f, ParameterRole role);

/// Bonferroni test of c_1 .. at size alpha / (nu - 1); c_0 is always kept.
TransformReport fourier_test(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles,
                             double alpha);

}  // namespace parma
