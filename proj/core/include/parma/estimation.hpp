#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parma/core.hpp"

namespace parma {

/// Per-season sample mean: mu_i = (1/N) sum_j y[j*nu + i].
SeasonalVector sample_mu(const PeriodicSeries& y);

/// Per-season sample autocovariance at season `season`, lag `lag` >= 0.
///
/// gamma_i(m) = (1/N) sum_{j=0}^{N-1} (y[j nu + i] - mu_i)(y[j nu + i + m] - mu_<i+m>),
/// with terms beyond the end of the series dropped; the divisor is always N.
double sample_autocov(const PeriodicSeries& y, std::size_t season, std::size_t lag);

/// Same estimator with caller-supplied per-season means (all zeros disables centering).
double sample_autocov(const PeriodicSeries& y, std::span<const double> means, std::size_t season, std::size_t lag);

/// Table of gamma_i(m) for every season i and lags 0..max_lag.
class SeasonalAutocovariance {
public:
    enum class Centering { SeasonalMean, None };

    SeasonalAutocovariance(std::size_t period, std::size_t max_lag, std::vector<double> table);

    static SeasonalAutocovariance estimate(const PeriodicSeries& y, std::size_t max_lag,
                                           Centering centering = Centering::SeasonalMean);

    std::size_t period() const noexcept { return period_; }
    std::size_t max_lag() const noexcept { return max_lag_; }

    /// gamma_<season>(lag); negative lags use gamma_i(-m) = gamma_<i-m>(m).
    double operator()(std::int64_t season, std::int64_t lag) const;

    /// Season-average gamma(h) = nu^-1 sum_m gamma_m(h).
    double pooled(std::size_t lag) const;

private:
    std::size_t period_;
    std::size_t max_lag_;
    std::vector<double> table_;  // [season * (max_lag + 1) + lag]
};

/// gamma_season(lag) for season in [0, nu) and lag >= 0.
using AutocovarianceFn = std::function<double(std::size_t season, std::size_t lag)>;

/// Innovations algorithm output for every starting season i:
/// theta(n, j, i) = theta_{n,j}^{(i)} for 1 <= j <= n, v(n, i) = v_{n,i}.
class InnovationsState {
public:
    InnovationsState(std::size_t period, std::size_t iterations);

    std::size_t period() const noexcept { return period_; }
    std::size_t iterations() const noexcept { return iterations_; }

    double theta(std::size_t n, std::size_t j, std::size_t season) const;
    double v(std::size_t n, std::size_t season) const;

    double& theta_ref(std::size_t n, std::size_t j, std::size_t season);
    double& v_ref(std::size_t n, std::size_t season);

private:
    std::size_t offset(std::size_t n, std::size_t j) const noexcept { return n * (n - 1) / 2 + (j - 1); }

    std::size_t period_;
    std::size_t iterations_;
    std::vector<std::vector<double>> theta_;  // per season, packed triangular
    std::vector<std::vector<double>> v_;      // per season, n = 0..iterations
};

/// Periodic innovations recursion on the autocovariances `gamma`.
///
/// Throws Error "NonPositivePredictionVariance" when some v_{n,i} <= 0.
InnovationsState innovations(const AutocovarianceFn& gamma, std::size_t period, std::size_t iterations);
InnovationsState innovations(const SeasonalAutocovariance& gamma, std::size_t iterations);

/// psi_i(j) for j = 1..max_lag and sigma2_i, read from iteration n of the recursion.
struct PsiEstimate {
    std::vector<SeasonalVector> psi;  // psi[j-1] holds psi(j)
    SeasonalVector sigma2;

    const SeasonalVector& lag(std::size_t j) const { return psi.at(j - 1); }
};

/// psi_i(j) = theta_{n,j}^{(<i-n>)}, sigma2_i = v_{n,<i-n>}.
PsiEstimate psi_sigma_from_innovations(const InnovationsState& state, std::size_t n, std::size_t max_lag);

struct FitOptions {
    std::size_t iterations = 7;
    double psi_floor = 1e-8;
};

/// A fitted model together with the intermediate estimates the covariance
/// formulas and reports need.
struct ParmaFit {
    ParmaModel model;
    PsiEstimate psi;
    SeasonalAutocovariance autocov;
    InnovationsState state;
    std::size_t cycles;
    FitOptions options;
};

/// PAR(1): mu from sample_mu, phi_i = psi_i(1), sigma2_i = v_{n,<i-n>}.
ParmaFit fit_par1(const PeriodicSeries& y, const FitOptions& options = {});

/// PARMA(1,1) on the uncentered series: phi_t = psi_t(2) / psi_{t-1}(1), theta_t = phi_t - psi_t(1).
ParmaFit fit_parma11(const PeriodicSeries& y, const FitOptions& options = {});

/// The psi -> (phi, theta) map used by fit_parma11.
///
/// Throws Error "DivisionBySmallPsi" when |psi_{t-1}(1)| < psi_floor.
ParmaModel parma11_from_psi(const SeasonalVector& psi1, const SeasonalVector& psi2, double psi_floor = 1e-8);

/// One-step residuals, length N*nu - 1 (t = 1 .. N*nu-1).
///
/// PARMA(1,1): e_t = y_t - phi_t y_{t-1} + theta_t e_{t-1}, e_0 = 0.
/// PAR(1):     d_t = (Y_t - phi_t Y_{t-1}) / sigma_t, Y_t = y_t - mu_t.
std::vector<double> residuals(const ParmaModel& model, const PeriodicSeries& y);

}  // namespace parma
