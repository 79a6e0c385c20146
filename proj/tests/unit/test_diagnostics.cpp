#include <gtest/gtest.h>

#include <random>

#include <parma/diagnostics.hpp>
#include <parma/errors.hpp>

#include "oracles.hpp"

using namespace parma;

TEST(Acf, HandComputedSpike) {
    // x = (0, 0, 4, 0): mean 1, deviations (-1, -1, 3, -1), sum of squares 12
    const std::vector<double> x{0, 0, 4, 0};
    const auto r = acf(x, 3);
    EXPECT_NEAR(r.rho[0], (1 - 3 - 3) / 12.0, 1e-15);
    EXPECT_NEAR(r.rho[1], (-3 + 1) / 12.0, 1e-15);
    EXPECT_NEAR(r.rho[2], 1 / 12.0, 1e-15);
    EXPECT_NEAR(r.band, 1.96 / 2.0, 1e-15);
}

TEST(Acf, BoundedAndErrors) {
    const auto x = oracle::normal_sample(200, 1);
    for (double rho : acf(x, 50).rho) {
        EXPECT_LE(std::abs(rho), 1.0);
    }
    EXPECT_THROW(acf(std::vector<double>(10, 2.0), 3), Error);
    EXPECT_THROW(acf(x, 200), std::invalid_argument);
}

TEST(Acf, WhiteNoiseStaysInsideWideBand) {
    const auto x = oracle::normal_sample(6000, 2);
    for (double rho : acf(x, 20).rho) {
        EXPECT_LT(std::abs(rho), 4.0 / std::sqrt(6000.0));
    }
}

TEST(BoxPierce, StatisticAndMonotonicity) {
    const auto x = oracle::normal_sample(500, 3);
    const auto r = acf(x, 30);
    double q = 0.0;
    double prev = 0.0;
    for (std::size_t h = 1; h <= 30; ++h) {
        q += r.rho[h - 1] * r.rho[h - 1];
        const auto bp = box_pierce(x, h);
        EXPECT_NEAR(bp.statistic, 500.0 * q, 1e-9);
        EXPECT_GE(bp.statistic, prev);
        EXPECT_GT(bp.p_value, 0.0);
        EXPECT_LE(bp.p_value, 1.0);
        prev = bp.statistic;
    }
}

TEST(BoxPierce, StrongAutocorrelationGivesTinyP) {
    std::vector<double> x(1000);
    for (std::size_t t = 0; t < x.size(); ++t) {
        x[t] = std::sin(0.05 * double(t));
    }
    const auto bp = box_pierce(x, 20);
    EXPECT_LT(bp.p_value, 1e-10);
    EXPECT_GT(bp.p_value, 0.0);
}

TEST(BoxPierce, LevelOnWhiteNoise) {
    int pass = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        pass += box_pierce(oracle::normal_sample(6000, 100 + s), 20).p_value > 0.05 ? 1 : 0;
    }
    EXPECT_GE(pass, 90);
}

TEST(Ks, NormalSampleLevel) {
    int pass = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        pass += ks_normal(oracle::normal_sample(2000, 300 + s)).p_value > 0.05 ? 1 : 0;
    }
    EXPECT_GE(pass, 45);
}

TEST(Ks, UniformSampleIsRejected) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u;
    std::vector<double> x(500);
    for (double& v : x) {
        v = u(rng);
    }
    EXPECT_LT(ks_normal(x).p_value, 0.01);
}

TEST(Ks, StatisticByBruteForce) {
    const std::vector<double> x{-1.2, 0.3, 0.8, -0.1, 2.0, -0.7, 0.0, 1.1, -1.9, 0.4};
    double m = 0.0;
    for (double v : x) {
        m += v / 10.0;
    }
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    const double sd = std::sqrt(ss / 9.0);
    double d = 0.0;
    for (double v : x) {
        const double z = (v - m) / sd;
        const double f = 0.5 * std::erfc(-z / std::sqrt(2.0));
        int below = 0;
        int at_or_below = 0;
        for (double w : x) {
            below += w < v ? 1 : 0;
            at_or_below += w <= v ? 1 : 0;
        }
        d = std::max({d, at_or_below / 10.0 - f, f - below / 10.0});
    }
    EXPECT_NEAR(ks_normal(x).statistic, d, 1e-12);
    EXPECT_THROW(ks_normal(std::vector<double>(7, 1.0)), std::invalid_argument);
}

TEST(Histogram, CountsMatchBruteForce) {
    const auto x = oracle::normal_sample(1000, 5);
    const auto h = histogram(x, 17);
    ASSERT_EQ(h.edges.size(), 18u);
    std::vector<std::size_t> counts(17, 0);
    for (double v : x) {
        std::size_t b = 0;
        while (b < 16 && v >= h.edges[b + 1]) {
            ++b;
        }
        ++counts[b];
    }
    EXPECT_EQ(h.counts, counts);
    double area = 0.0;
    for (std::size_t b = 0; b < 17; ++b) {
        area += h.density[b] * (h.edges[b + 1] - h.edges[b]);
    }
    EXPECT_NEAR(area, 1.0, 1e-12);
    EXPECT_EQ(h.curve_x.size(), 200u);
}

TEST(Histogram, SingleBinAndSymmetry) {
    const std::vector<double> x{-2, -1, 0, 1, 2};
    EXPECT_EQ(histogram(x, 1).counts, (std::vector<std::size_t>{5}));
    const auto h = histogram(x, 4);
    EXPECT_EQ(h.counts.front(), 1u);
    EXPECT_EQ(h.counts.back(), 2u);  // the maximum joins the last bin
    EXPECT_THROW(histogram(x, 0), std::invalid_argument);
}
