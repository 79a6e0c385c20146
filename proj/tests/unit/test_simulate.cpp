#include <gtest/gtest.h>

#include <parma/simulate.hpp>

#include "oracles.hpp"

using namespace parma;

TEST(Simulate, SameSeedSameSeries) {
    const SimConfig cfg{benchmark_parma11_model(), 50, 10, 42, 1.0};
    const auto a = simulate(cfg);
    const auto b = simulate(cfg);
    ASSERT_EQ(a.size(), 600u);
    for (std::size_t t = 0; t < a.size(); ++t) {
        ASSERT_EQ(a[t], b[t]);
    }
    SimConfig other = cfg;
    other.seed = replication_seed(42, 1);
    EXPECT_NE(simulate(other)[0], a[0]);
}

TEST(Simulate, NoiselessRecursionStaysAtZero) {
    const auto y = simulate(SimConfig{benchmark_parma11_model(), 20, 10, 1, 0.0});
    for (double v : y.values()) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(Simulate, Par1VariancesReachPeriodicFixedPoint) {
    const std::vector<double> phi{0.9, -0.4, 0.7, 1.1};
    const std::vector<double> sigma2{1.0, 2.0, 0.5, 1.5};
    const auto model = ParmaModel::par1(SeasonalVector({5.0, -1.0, 0.0, 2.0}, ParameterRole::Mu),
                                        SeasonalVector(phi, ParameterRole::Phi),
                                        SeasonalVector(sigma2, ParameterRole::Sigma2));
    const auto y = simulate(SimConfig{model, 20000, 10, 9, 1.0});
    const oracle::Par1Autocov truth(phi, sigma2);
    for (std::size_t i = 0; i < 4; ++i) {
        double m = 0.0;
        for (std::size_t c = 0; c < y.cycles(); ++c) {
            m += y.at(c, i);
        }
        m /= double(y.cycles());
        double v = 0.0;
        for (std::size_t c = 0; c < y.cycles(); ++c) {
            v += (y.at(c, i) - m) * (y.at(c, i) - m);
        }
        v /= double(y.cycles());
        EXPECT_NEAR(v, truth.var[i], 0.05 * truth.var[i]) << "season " << i;
        EXPECT_NEAR(m, model.mu()[i], 0.1);
    }
}

TEST(Simulate, WhiteNoisePar1HasSeasonalVariances) {
    const std::vector<double> sigma2{0.5, 3.0, 1.0};
    const auto model = ParmaModel::par1(SeasonalVector::constant(3, 0.0, ParameterRole::Mu),
                                        SeasonalVector::constant(3, 0.0, ParameterRole::Phi),
                                        SeasonalVector(sigma2, ParameterRole::Sigma2));
    const auto y = simulate(SimConfig{model, 20000, 0, 4, 1.0});
    for (std::size_t i = 0; i < 3; ++i) {
        double v = 0.0;
        for (std::size_t c = 0; c < y.cycles(); ++c) {
            v += y.at(c, i) * y.at(c, i);
        }
        EXPECT_NEAR(v / double(y.cycles()), sigma2[i], 0.05 * sigma2[i]);
    }
}

TEST(Simulate, RejectsZeroCycles) {
    EXPECT_THROW(simulate(SimConfig{benchmark_parma11_model(), 0, 10, 1, 1.0}), std::invalid_argument);
}

TEST(Simulate, BenchmarkModelIsStationary) {
    const auto m = benchmark_parma11_model();
    double prod = 1.0;
    for (double v : m.phi().entries()) {
        prod *= v;
    }
    EXPECT_LT(std::abs(prod), 0.05);
    EXPECT_EQ(m.period(), 12u);
    EXPECT_DOUBLE_EQ(m.phi()[8], 1.83);
    EXPECT_DOUBLE_EQ(m.theta_at(4), 1.43);
}
