#pragma once

// Asymptotic covariance matrices of the seasonal estimators, both under the
// stationarity null (pooled parameters) and in the general periodic form.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "parma/core.hpp"

namespace parma {

struct ParmaFit;

/// Season averages of the fitted quantities, used as plug-in values under H0.
struct PooledParams {
    std::vector<double> gamma;  // gamma(h), h = 0..max_lag
    double phi = 0.0;
    double theta = 0.0;
    double psi1 = 0.0;
    double psi2 = 0.0;
    double sigma2 = 0.0;

    double gamma0() const { return gamma.at(0); }

    static PooledParams from_fit(const ParmaFit& fit);
};

/// Cyclic shift with ones at (i, i+1 mod nu).
Matrix pi_matrix(std::size_t period);

/// Integer power of pi_matrix, negative powers allowed (Pi^-1 = Pi').
Matrix pi_power(std::size_t period, std::int64_t power);

/// Covariance of sqrt(N) mu-hat for a stationary AR(1) with variance gamma0.
CovMatrix sigma_mu_h0(double gamma0, double phi, std::size_t period);

/// Covariance of sqrt(N) sigma2-hat for a stationary AR(1) (four-term closed form).
CovMatrix sigma_sigma2_h0(double gamma0, double phi, std::size_t period);

/// Covariance of sqrt(N) phi-hat for PAR(1) under H0: the identity.
CovMatrix sigma_phi_h0(std::size_t period);

/// Closed-form V_lk (l, k in {1, 2}) for constant psi(1) and unit noise variance.
Matrix build_vlk_h0(double psi1, int l, int k, std::size_t period);

/// General V_lk = sum_{j=1}^{min(l,k)} (F_{l-j} Pi^{-(l-j)}) B_j (F_{k-j} Pi^{-(k-j)})'.
///
/// `psi[j]` is the seasonal psi(j) vector with psi[0] all ones; `sigma2` gives
/// B_j = diag(sigma2_i / sigma2_{i-j}).
Matrix build_vlk(const std::vector<Vector>& psi, const Vector& sigma2, int l, int k);

/// Sign of the identity in M_1 = (+/-)I - F_2 Pi^-1 F_1^-2 for the theta covariance.
///
/// MinusIdentity is the Jacobian of theta_t = phi_t - psi_t(1) and is the default.
enum class ThetaJacobian { MinusIdentity, PlusIdentity };

/// Covariance of sqrt(N) phi-hat for PARMA(1,1) under H0 (constant psi(1), psi(2)).
CovMatrix q_matrix_h0(double psi1, double psi2, std::size_t period);

/// Covariance of sqrt(N) theta-hat for PARMA(1,1) under H0.
CovMatrix s_matrix_h0(double psi1, double psi2, std::size_t period,
                      ThetaJacobian jacobian = ThetaJacobian::MinusIdentity);

/// General periodic Q from seasonal psi(1), psi(2) and noise variances.
CovMatrix q_matrix(const Vector& psi1, const Vector& psi2, const Vector& sigma2);

/// General periodic S from seasonal psi(1), psi(2) and noise variances.
CovMatrix s_matrix(const Vector& psi1, const Vector& psi2, const Vector& sigma2,
                   ThetaJacobian jacobian = ThetaJacobian::MinusIdentity);

/// gamma_season(lag) for season in [0, nu) and any integer lag.
using SignedAutocovarianceFn = std::function<double(std::size_t season, std::int64_t lag)>;

/// sum_{n=-T}^{T} B_n Pi^n with B_n = diag(gamma_0(n), ..., gamma_{nu-1}(n)).
CovMatrix sigma_mu_general_truncated(const SignedAutocovarianceFn& gamma, std::size_t period,
                                     std::size_t truncation);

}  // namespace parma
