#include "parma/compress.hpp"

#include <stdexcept>

#include "parma/fourier.hpp"

namespace parma {

CovMatrix h0_covariance(const ParmaFit& fit, ParameterRole role, ThetaJacobian jacobian) {
    const PooledParams pooled = PooledParams::from_fit(fit);
    const std::size_t nu = fit.model.period();
    if (fit.model.kind() == ModelKind::Par1) {
        switch (role) {
            case ParameterRole::Mu:
                return sigma_mu_h0(pooled.gamma0(), pooled.phi, nu);
            case ParameterRole::Phi:
                return sigma_phi_h0(nu);
            case ParameterRole::Sigma2:
                return sigma_sigma2_h0(pooled.gamma0(), pooled.phi, nu);
            default:
                break;
        }
    } else {
        switch (role) {
            case ParameterRole::Phi:
                return q_matrix_h0(pooled.psi1, pooled.psi2, nu);
            case ParameterRole::Theta:
                return s_matrix_h0(pooled.psi1, pooled.psi2, nu, jacobian);
            default:
                break;
        }
    }
    throw std::invalid_argument("h0_covariance: no null covariance for " + to_string(role) + " in a " +
                                to_string(fit.model.kind()) + " model");
}

TransformReport test_parameter(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles,
                               const CompressionSettings& settings) {
    if (settings.transform == TransformKind::Fourier) {
        return fourier_test(estimate, sigma, cycles, settings.alpha);
    }
    return wavelet_test(estimate, sigma, cycles, settings.alpha, settings.wavelet);
}

CompressionResult compress_model(const ParmaFit& fit, const CompressionSettings& settings) {
    const ParmaModel& m = fit.model;
    auto run = [&](const SeasonalVector& v) {
        return test_parameter(v, h0_covariance(fit, v.role(), settings.theta_jacobian), fit.cycles, settings);
    };

    std::vector<TransformReport> reports;
    if (m.kind() == ModelKind::Par1) {
        reports.push_back(run(m.mu()));
        reports.push_back(run(m.phi()));
        reports.push_back(run(m.sigma2()));
    } else {
        reports.push_back(run(m.phi()));
        reports.push_back(run(*m.theta()));
    }

    std::size_t retained = 0;
    for (const TransformReport& r : reports) {
        retained += r.retained_count();
    }
    auto rebuilt = [&](std::size_t k) { return SeasonalVector(reports[k].reconstructed, reports[k].role); };
    ParmaModel model = m.kind() == ModelKind::Par1 ? ParmaModel::par1(rebuilt(0), rebuilt(1), rebuilt(2))
                                                   : ParmaModel::parma11(rebuilt(0), rebuilt(1));
    return CompressionResult{std::move(model), std::move(reports), retained, m.parameter_count()};
}

}  // namespace parma
