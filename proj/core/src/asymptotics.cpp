#include "parma/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "parma/estimation.hpp"

namespace parma {

namespace {

void require_stationary_phi(double phi, const char* where) {
    if (!(std::abs(phi) < 1.0)) {
        throw numerical_error("NonStationaryPooledPhi",
                              std::string(where) + ": pooled |phi| = " + std::to_string(std::abs(phi)) +
                                  " must be below 1");
    }
}

void require_invertible_psi1(double psi1, const char* where) {
    if (psi1 == 0.0 || !std::isfinite(psi1)) {
        throw numerical_error("SingularPsi1", std::string(where) + ": psi(1) = 0 makes F_1 singular");
    }
}

Matrix identity(std::size_t n) {
    return Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

// sum_{l,k in {1,2}} A_l V_lk A_k'
Matrix sandwich(const Matrix& a1, const Matrix& a2, const Matrix& v11, const Matrix& v12, const Matrix& v21,
                const Matrix& v22) {
    return a1 * v11 * a1.transpose() + a1 * v12 * a2.transpose() + a2 * v21 * a1.transpose() +
           a2 * v22 * a2.transpose();
}

}  // namespace

PooledParams PooledParams::from_fit(const ParmaFit& fit) {
    PooledParams p;
    for (std::size_t h = 0; h <= fit.autocov.max_lag(); ++h) {
        p.gamma.push_back(fit.autocov.pooled(h));
    }
    p.phi = fit.model.phi().mean();
    p.theta = fit.model.theta() ? fit.model.theta()->mean() : 0.0;
    p.psi1 = fit.psi.lag(1).mean();
    p.psi2 = fit.psi.psi.size() >= 2 ? fit.psi.lag(2).mean() : 0.0;
    p.sigma2 = fit.psi.sigma2.mean();
    return p;
}

Matrix pi_matrix(std::size_t period) {
    if (period == 0) {
        throw std::invalid_argument("pi_matrix: period must be positive");
    }
    const auto n = static_cast<Eigen::Index>(period);
    Matrix pi = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        pi(i, (i + 1) % n) = 1.0;
    }
    return pi;
}

Matrix pi_power(std::size_t period, std::int64_t power) {
    const auto n = static_cast<Eigen::Index>(period);
    const std::size_t shift = seasonal_index(power, period);
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i, static_cast<Eigen::Index>((static_cast<std::size_t>(i) + shift) % period)) = 1.0;
    }
    return out;
}

CovMatrix sigma_mu_h0(double gamma0, double phi, std::size_t period) {
    require_stationary_phi(phi, "sigma_mu_h0");
    const auto n = static_cast<Eigen::Index>(period);
    const double nu = static_cast<double>(period);
    const double r = std::pow(phi, nu);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = gamma0 * (1.0 + r) / (1.0 - r);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = static_cast<double>(j - i);
            m(i, j) = gamma0 * (std::pow(phi, d) + std::pow(phi, nu - d)) / (1.0 - r);
            m(j, i) = m(i, j);
        }
    }
    return CovMatrix(std::move(m), {CovSource::MuH0, false});
}

CovMatrix sigma_sigma2_h0(double gamma0, double phi, std::size_t period) {
    require_stationary_phi(phi, "sigma_sigma2_h0");
    const auto n = static_cast<Eigen::Index>(period);
    const double nu = static_cast<double>(period);
    const double r = std::pow(phi, nu);
    const double g2 = gamma0 * gamma0;
    const double denom = 1.0 - r * r;
    auto p = [phi](double e) { return std::pow(phi, e); };

    Matrix m(n, n);
    const double diag = 2.0 * g2 * (1.0 + p(2.0 * nu)) / denom -
                        2.0 * phi * 2.0 * g2 * (phi + p(2.0 * nu - 1.0)) / denom +
                        phi * phi * g2 * (phi * phi + (1.0 + 3.0 * r * r) / denom);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = diag;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = static_cast<double>(j - i);
            const double value = 2.0 * g2 * (p(2.0 * d) + p(2.0 * (nu - d))) / denom -
                                 2.0 * g2 * phi * (p(2.0 * d - 1.0) + p(2.0 * nu - 2.0 * d + 1.0)) / denom -
                                 2.0 * g2 * phi * (p(2.0 * d + 1.0) + p(2.0 * nu - 2.0 * d - 1.0)) / denom +
                                 2.0 * g2 * phi * phi * (p(2.0 * d) + p(2.0 * nu - 2.0 * d)) / denom;
            m(i, j) = value;
            m(j, i) = value;
        }
    }
    return CovMatrix(std::move(m), {CovSource::Sigma2H0, false});
}

CovMatrix sigma_phi_h0(std::size_t period) {
    return CovMatrix(identity(period), {CovSource::PhiH0Identity, false});
}

Matrix build_vlk_h0(double psi1, int l, int k, std::size_t period) {
    if (l < 1 || l > 2 || k < 1 || k > 2) {
        throw std::invalid_argument("build_vlk_h0: l and k must be 1 or 2");
    }
    if (l == 1 && k == 1) {
        return identity(period);
    }
    if (l == 1 && k == 2) {
        return psi1 * pi_matrix(period);
    }
    if (l == 2 && k == 1) {
        return psi1 * pi_matrix(period).transpose();
    }
    return (psi1 * psi1 + 1.0) * identity(period);
}

Matrix build_vlk(const std::vector<Vector>& psi, const Vector& sigma2, int l, int k) {
    if (l < 1 || k < 1) {
        throw std::invalid_argument("build_vlk: l and k must be positive");
    }
    const int top = std::max(l, k);
    if (psi.size() < static_cast<std::size_t>(top)) {
        throw std::invalid_argument("build_vlk: psi must hold lags 0..max(l,k)-1");
    }
    const auto n = static_cast<std::size_t>(sigma2.size());
    Matrix v = Matrix::Zero(sigma2.size(), sigma2.size());
    for (int j = 1; j <= std::min(l, k); ++j) {
        Vector b(sigma2.size());
        for (std::size_t i = 0; i < n; ++i) {
            b(static_cast<Eigen::Index>(i)) =
                sigma2(static_cast<Eigen::Index>(i)) /
                sigma2(static_cast<Eigen::Index>(seasonal_index(static_cast<std::int64_t>(i) - j, n)));
        }
        const Matrix left = psi[static_cast<std::size_t>(l - j)].asDiagonal() * pi_power(n, -(l - j));
        const Matrix right = psi[static_cast<std::size_t>(k - j)].asDiagonal() * pi_power(n, -(k - j));
        v += left * b.asDiagonal() * right.transpose();
    }
    return v;
}

CovMatrix q_matrix_h0(double psi1, double psi2, std::size_t period) {
    require_invertible_psi1(psi1, "q_matrix_h0");
    const Matrix pi_inv = pi_matrix(period).transpose();
    const Matrix h1 = -(psi2 / (psi1 * psi1)) * pi_inv;
    const Matrix h2 = (1.0 / psi1) * identity(period);
    Matrix q = sandwich(h1, h2, build_vlk_h0(psi1, 1, 1, period), build_vlk_h0(psi1, 1, 2, period),
                        build_vlk_h0(psi1, 2, 1, period), build_vlk_h0(psi1, 2, 2, period));
    return CovMatrix(std::move(q), {CovSource::QH0, false});
}

CovMatrix s_matrix_h0(double psi1, double psi2, std::size_t period, ThetaJacobian jacobian) {
    require_invertible_psi1(psi1, "s_matrix_h0");
    const double sign = jacobian == ThetaJacobian::MinusIdentity ? -1.0 : 1.0;
    const Matrix pi_inv = pi_matrix(period).transpose();
    const Matrix m1 = sign * identity(period) - (psi2 / (psi1 * psi1)) * pi_inv;
    const Matrix m2 = (1.0 / psi1) * identity(period);
    Matrix s = sandwich(m1, m2, build_vlk_h0(psi1, 1, 1, period), build_vlk_h0(psi1, 1, 2, period),
                        build_vlk_h0(psi1, 2, 1, period), build_vlk_h0(psi1, 2, 2, period));
    return CovMatrix(std::move(s), {CovSource::SH0, false});
}

namespace {

struct GeneralPieces {
    Matrix f1_inv_shifted;  // Pi^-1 F_1^-1 Pi
    Matrix f2_pi_inv_f1_inv2;  // F_2 Pi^-1 F_1^-2
    Matrix v11, v12, v21, v22;
};

GeneralPieces general_pieces(const Vector& psi1, const Vector& psi2, const Vector& sigma2) {
    const auto n = static_cast<std::size_t>(psi1.size());
    if (psi2.size() != psi1.size() || sigma2.size() != psi1.size() || n == 0) {
        throw std::invalid_argument("q_matrix/s_matrix: vectors must share one period");
    }
    for (Eigen::Index i = 0; i < psi1.size(); ++i) {
        require_invertible_psi1(psi1(i), "q_matrix/s_matrix");
        if (!(sigma2(i) > 0.0)) {
            throw numerical_error("NonPositiveVariance", "q_matrix/s_matrix: sigma2 must be positive");
        }
    }
    const Matrix pi = pi_matrix(n);
    const Matrix pi_inv = pi.transpose();
    const Vector f1_inv = psi1.cwiseInverse();
    const Vector f1_inv2 = f1_inv.cwiseProduct(f1_inv);
    const std::vector<Vector> psi{Vector::Ones(psi1.size()), psi1};

    GeneralPieces g;
    g.f1_inv_shifted = pi_inv * f1_inv.asDiagonal() * pi;
    g.f2_pi_inv_f1_inv2 = psi2.asDiagonal() * pi_inv * f1_inv2.asDiagonal();
    g.v11 = build_vlk(psi, sigma2, 1, 1);
    g.v12 = build_vlk(psi, sigma2, 1, 2);
    g.v21 = build_vlk(psi, sigma2, 2, 1);
    g.v22 = build_vlk(psi, sigma2, 2, 2);
    return g;
}

}  // namespace

CovMatrix q_matrix(const Vector& psi1, const Vector& psi2, const Vector& sigma2) {
    const GeneralPieces g = general_pieces(psi1, psi2, sigma2);
    const Matrix h1 = -g.f2_pi_inv_f1_inv2;
    Matrix q = sandwich(h1, g.f1_inv_shifted, g.v11, g.v12, g.v21, g.v22);
    return CovMatrix(std::move(q), {CovSource::QGeneral, false});
}

CovMatrix s_matrix(const Vector& psi1, const Vector& psi2, const Vector& sigma2, ThetaJacobian jacobian) {
    const GeneralPieces g = general_pieces(psi1, psi2, sigma2);
    const double sign = jacobian == ThetaJacobian::MinusIdentity ? -1.0 : 1.0;
    const Matrix m1 = sign * identity(static_cast<std::size_t>(psi1.size())) - g.f2_pi_inv_f1_inv2;
    Matrix s = sandwich(m1, g.f1_inv_shifted, g.v11, g.v12, g.v21, g.v22);
    return CovMatrix(std::move(s), {CovSource::SGeneral, false});
}

CovMatrix sigma_mu_general_truncated(const SignedAutocovarianceFn& gamma, std::size_t period,
                                     std::size_t truncation) {
    const auto n = static_cast<Eigen::Index>(period);
    Matrix m = Matrix::Zero(n, n);
    const auto t = static_cast<std::int64_t>(truncation);
    for (std::int64_t lag = -t; lag <= t; ++lag) {
        const std::size_t shift = seasonal_index(lag, period);
        for (Eigen::Index i = 0; i < n; ++i) {
            // (B_n Pi^n)(i, i + n mod nu) = gamma_i(n)
            m(i, static_cast<Eigen::Index>((static_cast<std::size_t>(i) + shift) % period)) +=
                gamma(static_cast<std::size_t>(i), lag);
        }
    }
    return CovMatrix(std::move(m), {CovSource::MuGeneralTruncated, false});
}

}  // namespace parma
