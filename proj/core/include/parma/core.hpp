#pragma once

// Domain types shared by every parma module: periodic series, seasonal
// parameter vectors, PAR(1)/PARMA(1,1) models and asymptotic covariances.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "parma/errors.hpp"

namespace parma {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Season of time index `b` for period `period`, always in [0, period).
///
/// Negative indices wrap from the top: seasonal_index(-1, 12) == 11.
std::size_t seasonal_index(std::int64_t b, std::size_t period);

bool is_power_of_two(std::size_t n) noexcept;

/// Smallest power of two that is >= n (n itself when it already is one).
std::size_t next_power_of_two(std::size_t n);

/// Observations y_0 .. y_{N*period-1} covering N complete cycles.
class PeriodicSeries {
public:
    PeriodicSeries(std::vector<double> values, std::size_t period);

    std::size_t period() const noexcept { return period_; }
    std::size_t cycles() const noexcept { return values_.size() / period_; }
    std::size_t size() const noexcept { return values_.size(); }

    double operator[](std::size_t t) const { return values_[t]; }
    double at(std::size_t cycle, std::size_t season) const { return values_.at(cycle * period_ + season); }
    std::size_t season_of(std::size_t t) const noexcept { return t % period_; }

    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> values_;
    std::size_t period_;
};

enum class ParameterRole { Mu, Phi, Theta, Sigma2, Psi };

std::string to_string(ParameterRole role);

/// One period-length vector of a seasonal parameter family.
///
/// Sigma2 vectors must be strictly positive; every entry must be finite.
class SeasonalVector {
public:
    SeasonalVector(std::vector<double> entries, ParameterRole role, std::size_t psi_lag = 0);

    static SeasonalVector constant(std::size_t period, double value, ParameterRole role);

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t period() const noexcept { return entries_.size(); }
    ParameterRole role() const noexcept { return role_; }
    /// Lag j for Psi(j) vectors, 0 otherwise.
    std::size_t psi_lag() const noexcept { return psi_lag_; }

    double operator[](std::size_t season) const { return entries_[season]; }
    /// Entry for an arbitrary (possibly negative) time index, wrapped by season.
    double wrapped(std::int64_t t) const { return entries_[seasonal_index(t, entries_.size())]; }

    std::span<const double> entries() const noexcept { return entries_; }
    Vector to_eigen() const;
    double mean() const;

private:
    std::vector<double> entries_;
    ParameterRole role_;
    std::size_t psi_lag_;
};

enum class ModelKind { Par1, Parma11 };

std::string to_string(ModelKind kind);

/// PAR(1) or PARMA(1,1) parameter set.
///
/// PAR(1):      Y_t = phi_t Y_{t-1} + eps_t with Y_t = y_t - mu_t, Var eps_t = sigma2_t.
/// PARMA(1,1):  y_t = phi_t y_{t-1} + eps_t - theta_t eps_{t-1}, unit-variance noise, no mean.
///
/// Construction rejects models with |prod phi_t| >= 1.
class ParmaModel {
public:
    static ParmaModel par1(SeasonalVector mu, SeasonalVector phi, SeasonalVector sigma2);
    static ParmaModel parma11(SeasonalVector phi, SeasonalVector theta);

    ModelKind kind() const noexcept { return kind_; }
    std::size_t period() const noexcept { return phi_.size(); }

    const SeasonalVector& mu() const noexcept { return mu_; }
    const SeasonalVector& phi() const noexcept { return phi_; }
    const std::optional<SeasonalVector>& theta() const noexcept { return theta_; }
    const SeasonalVector& sigma2() const noexcept { return sigma2_; }

    /// theta_t for PARMA(1,1), 0 for PAR(1).
    double theta_at(std::size_t season) const { return theta_ ? (*theta_)[season] : 0.0; }

    /// Number of free seasonal parameters (3*period for PAR(1), 2*period for PARMA(1,1)).
    std::size_t parameter_count() const noexcept;

private:
    ParmaModel(ModelKind kind, SeasonalVector mu, SeasonalVector phi, std::optional<SeasonalVector> theta,
               SeasonalVector sigma2);

    ModelKind kind_;
    SeasonalVector mu_;
    SeasonalVector phi_;
    std::optional<SeasonalVector> theta_;
    SeasonalVector sigma2_;
};

/// Which closed form (or construction) produced a covariance matrix.
enum class CovSource {
    MuH0,
    Sigma2H0,
    PhiH0Identity,
    QH0,
    SH0,
    QGeneral,
    SGeneral,
    MuGeneralTruncated,
    Transformed,
    UserSupplied,
};

std::string to_string(CovSource source);

struct CovProvenance {
    CovSource source = CovSource::UserSupplied;
    bool extended = false;  // periodically extended from a shorter period
};

/// Symmetric asymptotic covariance with non-negative diagonal.
class CovMatrix {
public:
    CovMatrix(Matrix entries, CovProvenance provenance);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& matrix() const noexcept { return entries_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const CovProvenance& provenance() const noexcept { return provenance_; }

private:
    Matrix entries_;
    CovProvenance provenance_;
};

/// Wraps `x` to length `extended_length` (a power of two >= x.size()).
std::vector<double> periodic_extend_vector(std::span<const double> x, std::size_t extended_length);
std::vector<double> periodic_extend_vector(const SeasonalVector& x, std::size_t extended_length);

/// result(i, j) = sigma(<i>, <j>) with seasons taken modulo sigma.dim().
CovMatrix periodic_extend_cov(const CovMatrix& sigma, std::size_t extended_length);

}  // namespace parma
