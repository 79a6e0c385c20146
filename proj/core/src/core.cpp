#include "parma/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace parma {

std::size_t seasonal_index(std::int64_t b, std::size_t period) {
    if (period == 0) {
        throw std::invalid_argument("seasonal_index: period must be positive");
    }
    const auto p = static_cast<std::int64_t>(period);
    const std::int64_t r = b % p;
    return static_cast<std::size_t>(r < 0 ? r + p : r);
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("next_power_of_two: n must be positive");
    }
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

PeriodicSeries::PeriodicSeries(std::vector<double> values, std::size_t period)
    : values_(std::move(values)), period_(period) {
    if (period_ == 0) {
        throw std::invalid_argument("PeriodicSeries: period must be positive");
    }
    if (values_.empty() || values_.size() % period_ != 0) {
        throw data_error("IncompleteCycle", "PeriodicSeries: length " + std::to_string(values_.size()) +
                                                " is not a positive multiple of period " +
                                                std::to_string(period_));
    }
    for (std::size_t t = 0; t < values_.size(); ++t) {
        if (!std::isfinite(values_[t])) {
            throw data_error("NonFiniteValue", "PeriodicSeries: value at t=" + std::to_string(t) + " is not finite");
        }
    }
}

std::string to_string(ParameterRole role) {
    switch (role) {
        case ParameterRole::Mu: return "mu";
        case ParameterRole::Phi: return "phi";
        case ParameterRole::Theta: return "theta";
        case ParameterRole::Sigma2: return "sigma2";
        case ParameterRole::Psi: return "psi";
    }
    return "unknown";
}

SeasonalVector::SeasonalVector(std::vector<double> entries, ParameterRole role, std::size_t psi_lag)
    : entries_(std::move(entries)), role_(role), psi_lag_(role == ParameterRole::Psi ? psi_lag : 0) {
    if (entries_.empty()) {
        throw std::invalid_argument("SeasonalVector: period must be positive");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!std::isfinite(entries_[i])) {
            throw numerical_error("NonFiniteParameter",
                                  to_string(role_) + "[" + std::to_string(i) + "] is not finite");
        }
        if (role_ == ParameterRole::Sigma2 && !(entries_[i] > 0.0)) {
            throw numerical_error("NonPositiveVariance",
                                  "sigma2[" + std::to_string(i) + "] = " + std::to_string(entries_[i]) +
                                      " must be positive");
        }
    }
}

SeasonalVector SeasonalVector::constant(std::size_t period, double value, ParameterRole role) {
    return SeasonalVector(std::vector<double>(period, value), role);
}

Vector SeasonalVector::to_eigen() const {
    return Eigen::Map<const Vector>(entries_.data(), static_cast<Eigen::Index>(entries_.size()));
}

double SeasonalVector::mean() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0.0) / static_cast<double>(entries_.size());
}

std::string to_string(ModelKind kind) { return kind == ModelKind::Par1 ? "par1" : "parma11"; }

ParmaModel::ParmaModel(ModelKind kind, SeasonalVector mu, SeasonalVector phi, std::optional<SeasonalVector> theta,
                       SeasonalVector sigma2)
    : kind_(kind), mu_(std::move(mu)), phi_(std::move(phi)), theta_(std::move(theta)), sigma2_(std::move(sigma2)) {
    const std::size_t nu = phi_.size();
    if (mu_.size() != nu || sigma2_.size() != nu || (theta_ && theta_->size() != nu)) {
        throw std::invalid_argument("ParmaModel: parameter vectors must share one period");
    }
    double product = 1.0;
    for (double p : phi_.entries()) {
        product *= p;
    }
    if (!(std::abs(product) < 1.0)) {
        throw numerical_error("NonStationaryModel",
                              "|prod phi_t| = " + std::to_string(std::abs(product)) + " is not below 1");
    }
}

ParmaModel ParmaModel::par1(SeasonalVector mu, SeasonalVector phi, SeasonalVector sigma2) {
    if (mu.role() != ParameterRole::Mu || phi.role() != ParameterRole::Phi || sigma2.role() != ParameterRole::Sigma2) {
        throw std::invalid_argument("ParmaModel::par1: vectors passed in the wrong roles");
    }
    return ParmaModel(ModelKind::Par1, std::move(mu), std::move(phi), std::nullopt, std::move(sigma2));
}

ParmaModel ParmaModel::parma11(SeasonalVector phi, SeasonalVector theta) {
    if (phi.role() != ParameterRole::Phi || theta.role() != ParameterRole::Theta) {
        throw std::invalid_argument("ParmaModel::parma11: vectors passed in the wrong roles");
    }
    const std::size_t nu = phi.size();
    return ParmaModel(ModelKind::Parma11, SeasonalVector::constant(nu, 0.0, ParameterRole::Mu), std::move(phi),
                      std::move(theta), SeasonalVector::constant(nu, 1.0, ParameterRole::Sigma2));
}

std::size_t ParmaModel::parameter_count() const noexcept {
    return (kind_ == ModelKind::Par1 ? 3 : 2) * period();
}

std::string to_string(CovSource source) {
    switch (source) {
        case CovSource::MuH0: return "mu_h0";
        case CovSource::Sigma2H0: return "sigma2_h0";
        case CovSource::PhiH0Identity: return "phi_h0_identity";
        case CovSource::QH0: return "q_h0";
        case CovSource::SH0: return "s_h0";
        case CovSource::QGeneral: return "q_general";
        case CovSource::SGeneral: return "s_general";
        case CovSource::MuGeneralTruncated: return "mu_general_truncated";
        case CovSource::Transformed: return "transformed";
        case CovSource::UserSupplied: return "user";
    }
    return "unknown";
}

CovMatrix::CovMatrix(Matrix entries, CovProvenance provenance)
    : entries_(std::move(entries)), provenance_(provenance) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("CovMatrix: matrix must be square and non-empty");
    }
    if (!entries_.allFinite()) {
        throw numerical_error("NonFiniteCovariance", "CovMatrix: entries must be finite");
    }
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double asymmetry = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry > 1e-10 * scale) {
        throw std::invalid_argument("CovMatrix: matrix is not symmetric (max |A - A'| = " +
                                    std::to_string(asymmetry) + ")");
    }
    entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
    if (entries_.diagonal().minCoeff() < 0.0) {
        throw numerical_error("NegativeVariance", "CovMatrix: diagonal has a negative entry");
    }
}

std::vector<double> periodic_extend_vector(std::span<const double> x, std::size_t extended_length) {
    if (x.empty()) {
        throw std::invalid_argument("periodic_extend_vector: empty input");
    }
    if (!is_power_of_two(extended_length) || extended_length < x.size()) {
        throw std::invalid_argument("periodic_extend_vector: target length " + std::to_string(extended_length) +
                                    " must be a power of two >= " + std::to_string(x.size()));
    }
    std::vector<double> out(extended_length);
    for (std::size_t i = 0; i < extended_length; ++i) {
        out[i] = x[i % x.size()];
    }
    return out;
}

std::vector<double> periodic_extend_vector(const SeasonalVector& x, std::size_t extended_length) {
    return periodic_extend_vector(x.entries(), extended_length);
}

CovMatrix periodic_extend_cov(const CovMatrix& sigma, std::size_t extended_length) {
    const std::size_t nu = sigma.dim();
    if (!is_power_of_two(extended_length) || extended_length < nu) {
        throw std::invalid_argument("periodic_extend_cov: target length " + std::to_string(extended_length) +
                                    " must be a power of two >= " + std::to_string(nu));
    }
    const auto n = static_cast<Eigen::Index>(extended_length);
    Matrix out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = sigma.matrix()(i % static_cast<Eigen::Index>(nu), j % static_cast<Eigen::Index>(nu));
        }
    }
    return CovMatrix(std::move(out), CovProvenance{sigma.provenance().source, true});
}

}  // namespace parma
