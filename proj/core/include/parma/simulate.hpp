#pragma once

#include <cstddef>
#include <cstdint>

#include "parma/core.hpp"

namespace parma {

struct SimConfig {
    ParmaModel model;
    std::size_t cycles = 100;
    std::size_t burn_in_cycles = 10;
    std::uint64_t seed = 1;
    // multiplies every innovation; 0 gives the noiseless recursion
    double innovation_scale = 1.0;
};

/// Gaussian sample path of `cfg.model`, started from zero state at t = -burn_in * nu.
///
/// Deterministic given the seed (std::mt19937_64). PAR(1) output includes mu_t.
PeriodicSeries simulate(const SimConfig& cfg);

/// Seed of replication `index` in a batch started from `base`.
constexpr std::uint64_t replication_seed(std::uint64_t base, std::uint64_t index) noexcept { return base + index; }

/// The twelve-season PARMA(1,1) used as the benchmark simulation model.
ParmaModel benchmark_parma11_model();

}  // namespace parma
