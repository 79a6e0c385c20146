// Published coefficient tables recomputed from the published seasonal
// estimates of the 12-season PARMA(1,1) simulation (N = 500).

#include <gtest/gtest.h>

#include <map>
#include <set>

#include <parma/asymptotics.hpp>
#include <parma/fourier.hpp>
#include <parma/wavelet.hpp>

using namespace parma;

namespace {

const std::vector<double> kPhiHat{0.59, 0.73, 0.81, 0.77, 0.43, 0.72, 0.62, 1.04, 1.86, 1.83, 0.52, 0.68};
const std::vector<double> kThetaHat{0.06, 0.29, 0.30, 0.24, 1.22, 1.46, 0.40, 0.81, 0.28, 0.25, 0.21, 0.37};
constexpr std::size_t kCycles = 500;

struct Pooled {
    double psi1 = 0.0;
    double psi2 = 0.0;
};

// psi_t(1) = phi_t - theta_t and psi_t(2) = phi_t psi_{t-1}(1), averaged over seasons
Pooled pooled_psi() {
    Pooled p;
    for (std::size_t t = 0; t < 12; ++t) {
        const std::size_t prev = (t + 11) % 12;
        p.psi1 += (kPhiHat[t] - kThetaHat[t]) / 12.0;
        p.psi2 += kPhiHat[t] * (kPhiHat[prev] - kThetaHat[prev]) / 12.0;
    }
    return p;
}

std::set<std::size_t> significant(const TransformReport& r) {
    std::set<std::size_t> s;
    for (const auto& c : r.coefficients) {
        if (c.significant) {
            s.insert(c.index);
        }
    }
    return s;
}

double z_tolerance(double z) { return 0.06 + 0.01 * std::abs(z); }

}  // namespace

TEST(PublishedHaarTable, PhiColumn) {
    const Pooled p = pooled_psi();
    const auto r = wavelet_test(SeasonalVector(kPhiHat, ParameterRole::Phi), q_matrix_h0(p.psi1, p.psi2, 12),
                                kCycles, 0.05, WaveletSpec::haar());
    const std::vector<double> w{3.37, -0.52, 0.03, 0.71, -0.13, -0.26, 1.25, -0.13,
                                -0.10, 0.03, -0.21, -0.30, 0.02, -0.11, -0.10, 0.03};
    const std::vector<double> z{0, -5.30, 0.21, 5.09, -0.94, -1.85, 8.97, -0.94,
                                -0.72, 0.21, -1.49, -2.16, 0.15, -0.80, -0.72, 0.21};
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(r.coefficients[i].value, w[i], 0.015) << "W" << i;
        if (i > 0) {
            EXPECT_NEAR(r.coefficients[i].z, z[i], z_tolerance(z[i])) << "Z" << i;
        }
    }
    EXPECT_EQ(significant(r), (std::set<std::size_t>{1, 3, 6}));
    EXPECT_EQ(r.retained_count(), 4u);
}

TEST(PublishedHaarTable, ThetaColumn) {
    const Pooled p = pooled_psi();
    const auto r = wavelet_test(SeasonalVector(kThetaHat, ParameterRole::Theta), s_matrix_h0(p.psi1, p.psi2, 12),
                                kCycles, 0.05, WaveletSpec::haar());
    const std::vector<double> w{1.69, 0.69, -1.06, 0.08, -0.10, 0.73, -0.02, -0.10,
                                -0.16, 0.05, -0.17, -0.29, 0.02, -0.11, -0.16, 0.05};
    const std::vector<double> z{0, 6.12, -6.60, 0.48, -0.63, 4.80, -0.16, -0.63,
                                -1.21, 0.36, -1.27, -2.15, 0.14, -0.85, -1.21, 0.36};
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(r.coefficients[i].value, w[i], 0.015) << "W" << i;
        if (i > 0) {
            EXPECT_NEAR(r.coefficients[i].z, z[i], z_tolerance(z[i])) << "Z" << i;
        }
    }
    EXPECT_EQ(significant(r), (std::set<std::size_t>{1, 2, 5}));
    EXPECT_EQ(r.retained_count(), 4u);
}

TEST(PublishedHaarTable, PlusIdentityJacobianMissesThetaColumn) {
    const Pooled p = pooled_psi();
    const auto r = wavelet_test(SeasonalVector(kThetaHat, ParameterRole::Theta),
                                s_matrix_h0(p.psi1, p.psi2, 12, ThetaJacobian::PlusIdentity), kCycles, 0.05,
                                WaveletSpec::haar());
    EXPECT_GT(std::abs(r.coefficients[1].z - 6.12), 1.0);
}

TEST(PublishedFourierModel, PhiTerms) {
    const Pooled p = pooled_psi();
    const auto r = fourier_test(SeasonalVector(kPhiHat, ParameterRole::Phi), q_matrix_h0(p.psi1, p.psi2, 12),
                                kCycles, 0.05);
    // phi_t = 0.88 - 0.375 sin(1) - 0.27 cos(2) + 0.30 sin(2) - 0.195 sin(4)
    std::map<std::string, double> kept;
    for (const auto& c : r.coefficients) {
        if (c.retained) {
            kept[c.label] = c.value;
        }
    }
    ASSERT_EQ(kept.size(), 5u);
    EXPECT_NEAR(kept.at("c0"), 0.88, 0.015);
    EXPECT_NEAR(kept.at("s1"), -0.375, 0.015);
    EXPECT_NEAR(kept.at("c2"), -0.27, 0.015);
    EXPECT_NEAR(kept.at("s2"), 0.30, 0.015);
    EXPECT_NEAR(kept.at("s4"), -0.195, 0.015);
}

TEST(PublishedFourierModel, ThetaTerms) {
    const Pooled p = pooled_psi();
    const auto r = fourier_test(SeasonalVector(kThetaHat, ParameterRole::Theta), s_matrix_h0(p.psi1, p.psi2, 12),
                                kCycles, 0.05);
    // theta_t = 0.49 - 0.37 cos(1) + 0.195 sin(1) - 0.22 sin(2) - 0.25 cos(4)
    std::map<std::string, double> kept;
    for (const auto& c : r.coefficients) {
        if (c.retained) {
            kept[c.label] = c.value;
        }
    }
    ASSERT_EQ(kept.size(), 5u);
    EXPECT_NEAR(kept.at("c0"), 0.49, 0.015);
    EXPECT_NEAR(kept.at("c1"), -0.37, 0.015);
    EXPECT_NEAR(kept.at("s1"), 0.195, 0.015);
    EXPECT_NEAR(kept.at("s2"), -0.22, 0.015);
    EXPECT_NEAR(kept.at("c4"), -0.25, 0.015);
}

TEST(PublishedThreshold, WorkingValue) {
    // the published working value is |Z| > 2.95 for 15 tested coefficients
    EXPECT_NEAR(bonferroni_threshold(0.05, 16), 2.95, 0.02);
}
