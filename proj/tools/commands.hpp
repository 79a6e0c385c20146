#pragma once

// Pipeline commands behind the `parma` executable. Each returns its results
// in memory and, when an output directory is configured, writes its artifacts.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <parma/compress.hpp>
#include <parma/diagnostics.hpp>
#include <parma/estimation.hpp>
#include <parma/io.hpp>

namespace parma::cli {

struct RunConfig {
    std::size_t period = 12;
    ModelKind model = ModelKind::Parma11;
    std::size_t iterations = 7;
    double alpha = 0.05;
    std::string wavelet = "haar";
    TransformKind transform = TransformKind::Wavelet;
    std::uint64_t seed = 1;
    std::size_t cycles = 500;
    std::size_t burn_in_cycles = 10;
    std::vector<std::size_t> lags = {20, 30};
    std::size_t acf_lags = 40;
    std::size_t bins = 30;
    std::filesystem::path input;
    std::filesystem::path model_json;
    std::optional<std::filesystem::path> outdir;  // nothing is written when unset
    bool svg = false;
    ColumnSpec columns;  // period is taken from `period`
};

/// Throws config errors for out-of-range settings.
void validate(const RunConfig& cfg);

PeriodicSeries cmd_simulate(const RunConfig& cfg);

ParmaFit cmd_fit(const RunConfig& cfg);

CompressionResult cmd_compress(const RunConfig& cfg);

struct LagTest {
    std::size_t lag = 0;
    TestResult result;
};

struct DiagnosticsReport {
    std::vector<double> residuals;
    AcfResult acf;
    std::vector<LagTest> box_pierce;
    TestResult ks;
    Histogram histogram;

    double box_pierce_p(std::size_t lag) const;
};

/// Residual diagnostics of a model (from `cfg.model_json`) on the series in `cfg.input`.
DiagnosticsReport cmd_diagnose(const RunConfig& cfg);

/// Residual diagnostics of an in-memory model; `prefix` names the artifact files.
DiagnosticsReport diagnose(const ParmaModel& model, const PeriodicSeries& y, const RunConfig& cfg,
                           const std::string& prefix = "");

struct ModelSummary {
    std::string name;  // "parma", "fourier-parma", "wavelet-parma"
    ParmaModel model;
    std::size_t parameters = 0;
    DiagnosticsReport diagnostics;
};

struct ReproduceReport {
    std::uint64_t seed = 0;
    std::vector<ModelSummary> models;
    std::vector<TransformReport> fourier;
    std::vector<TransformReport> wavelet;

    const ModelSummary& find(const std::string& name) const;
};

/// Simulate the benchmark PARMA(1,1), fit it, compress it both ways and diagnose all three models.
ReproduceReport cmd_reproduce_sim(const RunConfig& cfg);

}  // namespace parma::cli
