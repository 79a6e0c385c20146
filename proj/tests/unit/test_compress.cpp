#include <gtest/gtest.h>

#include <parma/compress.hpp>
#include <parma/simulate.hpp>

using namespace parma;

namespace {

ParmaModel stationary_par1() {
    return ParmaModel::par1(SeasonalVector::constant(12, 10.0, ParameterRole::Mu),
                            SeasonalVector::constant(12, 0.5, ParameterRole::Phi),
                            SeasonalVector::constant(12, 2.0, ParameterRole::Sigma2));
}

}  // namespace

TEST(H0Covariance, DispatchesByModelAndRole) {
    const auto fit = fit_par1(simulate(SimConfig{stationary_par1(), 200, 10, 1, 1.0}), {2, 1e-8});
    EXPECT_EQ(h0_covariance(fit, ParameterRole::Mu).provenance().source, CovSource::MuH0);
    EXPECT_EQ(h0_covariance(fit, ParameterRole::Phi).provenance().source, CovSource::PhiH0Identity);
    EXPECT_EQ(h0_covariance(fit, ParameterRole::Sigma2).provenance().source, CovSource::Sigma2H0);
    EXPECT_THROW(h0_covariance(fit, ParameterRole::Theta), std::invalid_argument);

    const auto fit11 = fit_parma11(simulate(SimConfig{benchmark_parma11_model(), 200, 10, 1, 1.0}));
    EXPECT_EQ(h0_covariance(fit11, ParameterRole::Phi).provenance().source, CovSource::QH0);
    EXPECT_EQ(h0_covariance(fit11, ParameterRole::Theta).provenance().source, CovSource::SH0);
    EXPECT_THROW(h0_covariance(fit11, ParameterRole::Mu), std::invalid_argument);
}

TEST(H0Covariance, MuUsesPooledAutocovariances) {
    const auto fit = fit_par1(simulate(SimConfig{stationary_par1(), 400, 10, 2, 1.0}), {2, 1e-8});
    const PooledParams p = PooledParams::from_fit(fit);
    const CovMatrix s = h0_covariance(fit, ParameterRole::Mu);
    EXPECT_NEAR(s(0, 0), sigma_mu_h0(p.gamma0(), p.phi, 12)(0, 0), 1e-12);
}

TEST(Compress, StationaryPar1KeepsMostlyScalingCoefficients) {
    int fully_stationary = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto fit = fit_par1(simulate(SimConfig{stationary_par1(), 300, 10, 500 + seed, 1.0}), {2, 1e-8});
        const auto result = compress_model(fit, {TransformKind::Wavelet, WaveletSpec::haar(), 0.05, {}});
        EXPECT_EQ(result.original_parameters, 36u);
        EXPECT_EQ(result.reports.size(), 3u);
        fully_stationary += result.retained_parameters == 3 ? 1 : 0;
    }
    EXPECT_GE(fully_stationary, 14);
}

TEST(Compress, BenchmarkParmaShrinksAndStaysValid) {
    const auto fit = fit_parma11(simulate(SimConfig{benchmark_parma11_model(), 500, 10, 3, 1.0}));
    const auto w = compress_model(fit);
    EXPECT_EQ(w.original_parameters, 24u);
    EXPECT_LT(w.retained_parameters, 16u);
    EXPECT_EQ(w.model.kind(), ModelKind::Parma11);
    EXPECT_EQ(w.model.period(), 12u);
    std::size_t sum = 0;
    for (const auto& r : w.reports) {
        sum += r.retained_count();
        EXPECT_EQ(r.reconstructed.size(), 12u);
    }
    EXPECT_EQ(sum, w.retained_parameters);

    const auto f = compress_model(fit, {TransformKind::Fourier, WaveletSpec::haar(), 0.05, {}});
    EXPECT_EQ(f.reports.front().transform, TransformKind::Fourier);
    EXPECT_LT(f.retained_parameters, 24u);
}

TEST(Compress, CompressedVectorsMatchReports) {
    const auto fit = fit_parma11(simulate(SimConfig{benchmark_parma11_model(), 500, 10, 4, 1.0}));
    const auto w = compress_model(fit, {TransformKind::Wavelet, WaveletSpec::least_asymmetric(7), 0.05, {}});
    for (std::size_t i = 0; i < 12; ++i) {
        EXPECT_DOUBLE_EQ(w.model.phi()[i], w.reports[0].reconstructed[i]);
        EXPECT_DOUBLE_EQ(w.model.theta_at(i), w.reports[1].reconstructed[i]);
    }
}
