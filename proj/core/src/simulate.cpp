#include "parma/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace parma {

PeriodicSeries simulate(const SimConfig& cfg) {
    if (cfg.cycles == 0) {
        throw std::invalid_argument("simulate: cycles must be at least 1");
    }
    if (!(cfg.innovation_scale >= 0.0) || !std::isfinite(cfg.innovation_scale)) {
        throw std::invalid_argument("simulate: innovation_scale must be finite and non-negative");
    }
    const ParmaModel& m = cfg.model;
    const std::size_t nu = m.period();
    const std::size_t burn = cfg.burn_in_cycles * nu;
    const std::size_t total = burn + cfg.cycles * nu;

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<double> out;
    out.reserve(cfg.cycles * nu);
    double y_prev = 0.0;
    double e_prev = 0.0;
    // t runs from -burn; seasons stay aligned because burn is a whole number of cycles
    for (std::size_t k = 0; k < total; ++k) {
        const std::size_t s = k % nu;
        const double e = cfg.innovation_scale * std::sqrt(m.sigma2()[s]) * normal(rng);
        const double y = m.phi()[s] * y_prev + e - m.theta_at(s) * e_prev;
        if (k >= burn) {
            out.push_back(m.mu()[s] + y);
        }
        y_prev = y;
        e_prev = e;
    }
    return PeriodicSeries(std::move(out), nu);
}

ParmaModel benchmark_parma11_model() {
    return ParmaModel::parma11(
        SeasonalVector({0.67, 0.70, 0.69, 0.68, 0.67, 0.68, 0.69, 0.68, 1.83, 1.84, 0.53, 0.52}, ParameterRole::Phi),
        SeasonalVector({0.20, 0.23, 0.22, 0.21, 1.43, 1.44, 0.46, 0.47, 0.23, 0.24, 0.21, 0.23}, ParameterRole::Theta));
}

}  // namespace parma
