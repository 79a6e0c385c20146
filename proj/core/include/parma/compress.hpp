#pragma once

// Parsimonious models: test every seasonal parameter family in a transform
// basis under the stationarity null and rebuild the model from the survivors.

#include <cstddef>
#include <vector>

#include "parma/asymptotics.hpp"
#include "parma/estimation.hpp"
#include "parma/transform_report.hpp"
#include "parma/wavelet.hpp"

namespace parma {

struct CompressionSettings {
    TransformKind transform = TransformKind::Wavelet;
    WaveletSpec wavelet = WaveletSpec::haar();
    double alpha = 0.05;
    ThetaJacobian theta_jacobian = ThetaJacobian::MinusIdentity;
};

struct CompressionResult {
    ParmaModel model;
    std::vector<TransformReport> reports;  // mu, phi, sigma2 (PAR1) or phi, theta (PARMA11)
    std::size_t retained_parameters = 0;
    std::size_t original_parameters = 0;
};

/// H0 covariance of sqrt(N) times the estimate of `role`, from pooled fit values.
///
/// PAR(1): mu -> Sigma_mu, phi -> I, sigma2 -> Sigma_sigma2. PARMA(1,1): phi -> Q, theta -> S.
CovMatrix h0_covariance(const ParmaFit& fit, ParameterRole role,
                        ThetaJacobian jacobian = ThetaJacobian::MinusIdentity);

/// Run the transform test on one fitted parameter family.
TransformReport test_parameter(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles,
                               const CompressionSettings& settings);

CompressionResult compress_model(const ParmaFit& fit, const CompressionSettings& settings = {});

}  // namespace parma
