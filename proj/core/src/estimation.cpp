#include "parma/estimation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace parma {

SeasonalVector sample_mu(const PeriodicSeries& y) {
    const std::size_t nu = y.period();
    const std::size_t n_cycles = y.cycles();
    std::vector<double> mu(nu, 0.0);
    for (std::size_t j = 0; j < n_cycles; ++j) {
        for (std::size_t i = 0; i < nu; ++i) {
            mu[i] += y.at(j, i);
        }
    }
    for (double& m : mu) {
        m /= static_cast<double>(n_cycles);
    }
    return SeasonalVector(std::move(mu), ParameterRole::Mu);
}

double sample_autocov(const PeriodicSeries& y, std::span<const double> means, std::size_t season, std::size_t lag) {
    const std::size_t nu = y.period();
    if (season >= nu || means.size() != nu) {
        throw std::invalid_argument("sample_autocov: season or means out of range");
    }
    const std::size_t total = y.size();
    const double mu_i = means[season];
    const double mu_lag = means[(season + lag) % nu];
    double sum = 0.0;
    for (std::size_t j = 0; j < y.cycles(); ++j) {
        const std::size_t t = j * nu + season;
        if (t + lag >= total) {
            break;
        }
        sum += (y[t] - mu_i) * (y[t + lag] - mu_lag);
    }
    return sum / static_cast<double>(y.cycles());
}

double sample_autocov(const PeriodicSeries& y, std::size_t season, std::size_t lag) {
    const SeasonalVector mu = sample_mu(y);
    return sample_autocov(y, mu.entries(), season, lag);
}

SeasonalAutocovariance::SeasonalAutocovariance(std::size_t period, std::size_t max_lag, std::vector<double> table)
    : period_(period), max_lag_(max_lag), table_(std::move(table)) {
    if (period_ == 0 || table_.size() != period_ * (max_lag_ + 1)) {
        throw std::invalid_argument("SeasonalAutocovariance: table size does not match period and max lag");
    }
}

SeasonalAutocovariance SeasonalAutocovariance::estimate(const PeriodicSeries& y, std::size_t max_lag,
                                                        Centering centering) {
    const std::size_t nu = y.period();
    std::vector<double> means(nu, 0.0);
    if (centering == Centering::SeasonalMean) {
        const SeasonalVector mu = sample_mu(y);
        means.assign(mu.entries().begin(), mu.entries().end());
    }
    std::vector<double> table(nu * (max_lag + 1));
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t m = 0; m <= max_lag; ++m) {
            table[i * (max_lag + 1) + m] = sample_autocov(y, means, i, m);
        }
    }
    return SeasonalAutocovariance(nu, max_lag, std::move(table));
}

double SeasonalAutocovariance::operator()(std::int64_t season, std::int64_t lag) const {
    if (lag < 0) {
        season -= -lag;
        lag = -lag;
    }
    if (static_cast<std::size_t>(lag) > max_lag_) {
        throw std::out_of_range("SeasonalAutocovariance: lag " + std::to_string(lag) + " exceeds stored maximum " +
                                std::to_string(max_lag_));
    }
    return table_[seasonal_index(season, period_) * (max_lag_ + 1) + static_cast<std::size_t>(lag)];
}

double SeasonalAutocovariance::pooled(std::size_t lag) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < period_; ++i) {
        sum += (*this)(static_cast<std::int64_t>(i), static_cast<std::int64_t>(lag));
    }
    return sum / static_cast<double>(period_);
}

InnovationsState::InnovationsState(std::size_t period, std::size_t iterations)
    : period_(period),
      iterations_(iterations),
      theta_(period, std::vector<double>(iterations * (iterations + 1) / 2, 0.0)),
      v_(period, std::vector<double>(iterations + 1, 0.0)) {}

double InnovationsState::theta(std::size_t n, std::size_t j, std::size_t season) const {
    if (n == 0 || n > iterations_ || j == 0 || j > n || season >= period_) {
        throw std::out_of_range("InnovationsState::theta: index out of range");
    }
    return theta_[season][offset(n, j)];
}

double InnovationsState::v(std::size_t n, std::size_t season) const {
    if (n > iterations_ || season >= period_) {
        throw std::out_of_range("InnovationsState::v: index out of range");
    }
    return v_[season][n];
}

double& InnovationsState::theta_ref(std::size_t n, std::size_t j, std::size_t season) {
    return theta_.at(season).at(offset(n, j));
}

double& InnovationsState::v_ref(std::size_t n, std::size_t season) { return v_.at(season).at(n); }

InnovationsState innovations(const AutocovarianceFn& gamma, std::size_t period, std::size_t iterations) {
    if (period == 0 || iterations == 0) {
        throw std::invalid_argument("innovations: period and iterations must be positive");
    }
    InnovationsState state(period, iterations);
    auto g = [&](std::size_t season, std::size_t lag) { return gamma(season % period, lag); };

    for (std::size_t i = 0; i < period; ++i) {
        auto check = [&](std::size_t n) {
            const double vn = state.v(n, i);
            if (!(vn > 0.0)) {
                std::ostringstream msg;
                msg << "innovations: v_{" << n << "," << i << "} = " << vn << " is not positive";
                throw numerical_error("NonPositivePredictionVariance", msg.str());
            }
        };
        state.v_ref(0, i) = g(i, 0);
        check(0);
        for (std::size_t n = 1; n <= iterations; ++n) {
            // theta_{n,n-k} for k = 0..n-1, then v_n.
            for (std::size_t k = 0; k < n; ++k) {
                double acc = g(i + k, n - k);
                for (std::size_t j = 0; j < k; ++j) {
                    acc -= state.theta(k, k - j, i) * state.theta(n, n - j, i) * state.v(j, i);
                }
                state.theta_ref(n, n - k, i) = acc / state.v(k, i);
            }
            double vn = g(i + n, 0);
            for (std::size_t j = 0; j < n; ++j) {
                const double th = state.theta(n, n - j, i);
                vn -= th * th * state.v(j, i);
            }
            state.v_ref(n, i) = vn;
            check(n);
        }
    }
    return state;
}

InnovationsState innovations(const SeasonalAutocovariance& gamma, std::size_t iterations) {
    if (gamma.max_lag() < iterations) {
        throw std::invalid_argument("innovations: autocovariance table needs lags up to the iteration count");
    }
    return innovations(
        [&gamma](std::size_t season, std::size_t lag) {
            return gamma(static_cast<std::int64_t>(season), static_cast<std::int64_t>(lag));
        },
        gamma.period(), iterations);
}

PsiEstimate psi_sigma_from_innovations(const InnovationsState& state, std::size_t n, std::size_t max_lag) {
    if (n == 0 || n > state.iterations() || max_lag > n) {
        throw std::invalid_argument("psi_sigma_from_innovations: need 1 <= max_lag <= n <= iterations");
    }
    const std::size_t nu = state.period();
    std::vector<SeasonalVector> psi;
    psi.reserve(max_lag);
    for (std::size_t j = 1; j <= max_lag; ++j) {
        std::vector<double> entries(nu);
        for (std::size_t i = 0; i < nu; ++i) {
            const std::size_t start = seasonal_index(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n), nu);
            entries[i] = state.theta(n, j, start);
        }
        psi.emplace_back(std::move(entries), ParameterRole::Psi, j);
    }
    std::vector<double> sigma2(nu);
    for (std::size_t i = 0; i < nu; ++i) {
        sigma2[i] = state.v(n, seasonal_index(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(n), nu));
    }
    return PsiEstimate{std::move(psi), SeasonalVector(std::move(sigma2), ParameterRole::Sigma2)};
}

ParmaFit fit_par1(const PeriodicSeries& y, const FitOptions& options) {
    if (options.iterations == 0) {
        throw config_error("InvalidIterations", "fit_par1: iterations must be at least 1");
    }
    auto autocov = SeasonalAutocovariance::estimate(y, options.iterations);
    auto state = innovations(autocov, options.iterations);
    auto psi = psi_sigma_from_innovations(state, options.iterations, 1);

    std::vector<double> phi(psi.lag(1).entries().begin(), psi.lag(1).entries().end());
    auto model = ParmaModel::par1(sample_mu(y), SeasonalVector(std::move(phi), ParameterRole::Phi), psi.sigma2);
    return ParmaFit{std::move(model), std::move(psi), std::move(autocov), std::move(state), y.cycles(), options};
}

ParmaModel parma11_from_psi(const SeasonalVector& psi1, const SeasonalVector& psi2, double psi_floor) {
    const std::size_t nu = psi1.size();
    if (psi2.size() != nu) {
        throw std::invalid_argument("parma11_from_psi: psi vectors must share one period");
    }
    std::vector<double> phi(nu);
    std::vector<double> theta(nu);
    for (std::size_t t = 0; t < nu; ++t) {
        const double prev = psi1.wrapped(static_cast<std::int64_t>(t) - 1);
        if (std::abs(prev) < psi_floor) {
            throw numerical_error("DivisionBySmallPsi", "parma11_from_psi: |psi_" +
                                                            std::to_string(seasonal_index(
                                                                static_cast<std::int64_t>(t) - 1, nu)) +
                                                            "(1)| is below the floor (season t=" +
                                                            std::to_string(t) + ")");
        }
        phi[t] = psi2[t] / prev;
        theta[t] = phi[t] - psi1[t];
    }
    return ParmaModel::parma11(SeasonalVector(std::move(phi), ParameterRole::Phi),
                               SeasonalVector(std::move(theta), ParameterRole::Theta));
}

ParmaFit fit_parma11(const PeriodicSeries& y, const FitOptions& options) {
    if (options.iterations < 2) {
        throw config_error("InvalidIterations", "fit_parma11: at least 2 iterations are needed for psi(2)");
    }
    auto autocov =
        SeasonalAutocovariance::estimate(y, options.iterations, SeasonalAutocovariance::Centering::None);
    auto state = innovations(autocov, options.iterations);
    auto psi = psi_sigma_from_innovations(state, options.iterations, 2);
    auto model = parma11_from_psi(psi.lag(1), psi.lag(2), options.psi_floor);
    return ParmaFit{std::move(model), std::move(psi), std::move(autocov), std::move(state), y.cycles(), options};
}

std::vector<double> residuals(const ParmaModel& model, const PeriodicSeries& y) {
    const std::size_t nu = model.period();
    if (y.period() != nu) {
        throw std::invalid_argument("residuals: model and series periods differ");
    }
    const std::size_t total = y.size();
    std::vector<double> out;
    out.reserve(total - 1);

    if (model.kind() == ModelKind::Parma11) {
        double prev_eps = 0.0;
        for (std::size_t t = 1; t < total; ++t) {
            const std::size_t s = t % nu;
            const double eps = y[t] - model.phi()[s] * y[t - 1] + model.theta_at(s) * prev_eps;
            out.push_back(eps);
            prev_eps = eps;
        }
        return out;
    }

    for (std::size_t t = 1; t < total; ++t) {
        const std::size_t s = t % nu;
        const std::size_t prev = (t - 1) % nu;
        const double centered = y[t] - model.mu()[s];
        const double centered_prev = y[t - 1] - model.mu()[prev];
        out.push_back((centered - model.phi()[s] * centered_prev) / std::sqrt(model.sigma2()[s]));
    }
    return out;
}

}  // namespace parma
