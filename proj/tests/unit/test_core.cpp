#include <gtest/gtest.h>

#include <parma/core.hpp>

using namespace parma;

TEST(SeasonalIndex, WrapsNegativeTimes) {
    EXPECT_EQ(seasonal_index(0, 12), 0u);
    EXPECT_EQ(seasonal_index(13, 12), 1u);
    EXPECT_EQ(seasonal_index(-1, 12), 11u);
    EXPECT_EQ(seasonal_index(-12, 12), 0u);
    EXPECT_EQ(seasonal_index(-25, 12), 11u);
}

TEST(PowerOfTwo, NextPower) {
    EXPECT_TRUE(is_power_of_two(1));
    EXPECT_TRUE(is_power_of_two(64));
    EXPECT_FALSE(is_power_of_two(12));
    EXPECT_EQ(next_power_of_two(12), 16u);
    EXPECT_EQ(next_power_of_two(16), 16u);
    EXPECT_EQ(next_power_of_two(3), 4u);
}

TEST(PeriodicSeries, RejectsPartialCycle) {
    try {
        PeriodicSeries(std::vector<double>(13, 0.0), 12);
        FAIL() << "expected IncompleteCycle";
    } catch (const Error& e) {
        EXPECT_EQ(e.name(), "IncompleteCycle");
        EXPECT_EQ(e.category(), ErrorCategory::Data);
    }
}

TEST(PeriodicSeries, RejectsNonFinite) {
    std::vector<double> v(4, 1.0);
    v[2] = std::nan("");
    EXPECT_THROW(PeriodicSeries(v, 2), Error);
}

TEST(PeriodicSeries, CycleSeasonAccess) {
    PeriodicSeries y({0, 1, 2, 3, 4, 5}, 3);
    EXPECT_EQ(y.cycles(), 2u);
    EXPECT_EQ(y.at(1, 2), 5.0);
    EXPECT_EQ(y.season_of(4), 1u);
}

TEST(SeasonalVector, Sigma2MustBePositive) {
    EXPECT_THROW(SeasonalVector({1.0, 0.0}, ParameterRole::Sigma2), Error);
    EXPECT_NO_THROW(SeasonalVector({1.0, 0.0}, ParameterRole::Phi));
}

TEST(SeasonalVector, WrappedAccess) {
    SeasonalVector v({1, 2, 3}, ParameterRole::Phi);
    EXPECT_EQ(v.wrapped(-1), 3.0);
    EXPECT_EQ(v.wrapped(4), 2.0);
    EXPECT_DOUBLE_EQ(v.mean(), 2.0);
}

TEST(ParmaModel, RejectsNonStationaryProduct) {
    try {
        ParmaModel::parma11(SeasonalVector({2.0, 0.6}, ParameterRole::Phi),
                            SeasonalVector({0.1, 0.1}, ParameterRole::Theta));
        FAIL() << "expected NonStationaryModel";
    } catch (const Error& e) {
        EXPECT_EQ(e.name(), "NonStationaryModel");
    }
    // individual |phi| > 1 is fine as long as the cycle product is below one
    EXPECT_NO_THROW(ParmaModel::parma11(SeasonalVector({1.8, 0.5}, ParameterRole::Phi),
                                        SeasonalVector({0.1, 0.1}, ParameterRole::Theta)));
}

TEST(ParmaModel, ParameterCount) {
    const auto m = ParmaModel::par1(SeasonalVector::constant(4, 0.0, ParameterRole::Mu),
                                    SeasonalVector::constant(4, 0.5, ParameterRole::Phi),
                                    SeasonalVector::constant(4, 1.0, ParameterRole::Sigma2));
    EXPECT_EQ(m.parameter_count(), 12u);
    EXPECT_EQ(m.theta_at(2), 0.0);
}

TEST(CovMatrix, RejectsAsymmetry) {
    Matrix m(2, 2);
    m << 1, 0.5, 0.4, 1;
    EXPECT_THROW(CovMatrix(m, {}), std::invalid_argument);
}

TEST(CovMatrix, RejectsNegativeVariance) {
    Matrix m(2, 2);
    m << -1, 0, 0, 1;
    EXPECT_THROW(CovMatrix(m, {}), Error);
}

TEST(PeriodicExtension, WrapsVectorAndCovariance) {
    const std::vector<double> x{1, 2, 3};
    const auto e = periodic_extend_vector(x, 4);
    EXPECT_EQ(e, (std::vector<double>{1, 2, 3, 1}));
    EXPECT_THROW(periodic_extend_vector(x, 6), std::invalid_argument);
    EXPECT_THROW(periodic_extend_vector(x, 2), std::invalid_argument);

    Matrix m(3, 3);
    m << 4, 1, 2, 1, 5, 3, 2, 3, 6;
    const CovMatrix c = periodic_extend_cov(CovMatrix(m, {}), 4);
    EXPECT_TRUE(c.provenance().extended);
    EXPECT_EQ(c(3, 3), 4.0);
    EXPECT_EQ(c(3, 1), 1.0);
    EXPECT_EQ(c(2, 3), 2.0);
}
