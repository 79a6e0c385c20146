#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kData = 3, kNumerical = 4 };

int exit_code(parma::ErrorCategory c) {
    switch (c) {
        case parma::ErrorCategory::Config:
            return kConfig;
        case parma::ErrorCategory::Data:
            return kData;
        case parma::ErrorCategory::Numerical:
            return kNumerical;
    }
    return kNumerical;
}

void add_common(CLI::App* cmd, parma::cli::RunConfig& cfg, std::string& outdir) {
    const std::map<std::string, parma::ModelKind> models{{"par1", parma::ModelKind::Par1},
                                                         {"parma11", parma::ModelKind::Parma11}};
    cmd->add_option("--period", cfg.period, "Seasons per cycle")->capture_default_str();
    cmd->add_option("--model", cfg.model, "Model family")
        ->transform(CLI::CheckedTransformer(models))
        ->default_str("parma11");
    cmd->add_option("--iters", cfg.iterations, "Innovations algorithm iterations")->capture_default_str();
    cmd->add_option("--alpha", cfg.alpha, "Family-wise test level")->capture_default_str();
    cmd->add_option("--wavelet", cfg.wavelet, "haar or la1..la10 (la7 is the 14-tap symlet)")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    cmd->add_option("--cycles", cfg.cycles, "Simulated cycles N")->capture_default_str();
    cmd->add_option("--burn-in", cfg.burn_in_cycles, "Discarded warm-up cycles")->capture_default_str();
    cmd->add_option("--lags", cfg.lags, "Box-Pierce lags, comma separated")->delimiter(',')->capture_default_str();
    cmd->add_option("--acf-lags", cfg.acf_lags, "Lags in acf.csv")->capture_default_str();
    cmd->add_option("--bins", cfg.bins, "Histogram bins")->capture_default_str();
    cmd->add_option("--input", cfg.input, "Series table");
    cmd->add_option("--model-json", cfg.model_json, "Model file (simulate, diagnose)");
    cmd->add_option("--outdir", outdir, "Output directory")->capture_default_str();
    cmd->add_flag("--svg", cfg.svg, "Also write SVG plots");

    auto& col = cfg.columns;
    cmd->add_option("--year-col", col.year_column, "Header name of the cycle/year column")->capture_default_str();
    cmd->add_option("--season-col", col.season_column, "Header name of the season column")->capture_default_str();
    cmd->add_option("--value-col", col.value_column, "Header name of the value column")->capture_default_str();
    cmd->add_option("--season-base", col.season_base, "Number of the first season (1 for months)")
        ->capture_default_str();
    cmd->add_option("--skip-lines", col.skip_lines, "Lines to skip before the header")->capture_default_str();
    cmd->add_option("--missing", col.missing_markers, "Missing-value markers")->delimiter(',');
    cmd->add_option("--first-year", col.first_year, "Drop rows before this year");
    cmd->add_option("--last-year", col.last_year, "Drop rows after this year");
    cmd->add_option_function<std::string>(
           "--delimiter",
           [&col](const std::string& d) {
               if (d == "whitespace" || d == "ws") {
                   col.delimiter.reset();
               } else if (d.size() == 1) {
                   col.delimiter = d[0];
               } else {
                   throw CLI::ValidationError("--delimiter", "expected one character or 'whitespace'");
               }
           },
           "Field separator, or 'whitespace'")
        ->default_str(",");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic ARMA fitting and parameter compression"};
    app.require_subcommand(1);

    parma::cli::RunConfig cfg;
    std::string outdir = ".";
    std::string transform = "wavelet";

    auto* simulate = app.add_subcommand("simulate", "Simulate a series from a model");
    auto* fit = app.add_subcommand("fit", "Fit PAR(1) or PARMA(1,1) by the innovations algorithm");
    auto* compress = app.add_subcommand("compress", "Fit, test transform coefficients and compress");
    auto* diagnose = app.add_subcommand("diagnose", "Residual diagnostics of a model on a series");
    auto* reproduce = app.add_subcommand("reproduce-sim", "Simulate, fit, compress both ways and compare");
    for (auto* cmd : {simulate, fit, compress, diagnose, reproduce}) {
        add_common(cmd, cfg, outdir);
    }
    compress->add_option("--transform", transform, "fourier or wavelet")
        ->check(CLI::IsMember({"fourier", "wavelet"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }
    cfg.outdir = outdir;
    cfg.transform = transform == "fourier" ? parma::TransformKind::Fourier : parma::TransformKind::Wavelet;

    try {
        if (simulate->parsed()) {
            const auto y = parma::cli::cmd_simulate(cfg);
            std::cout << "simulated " << y.cycles() << " cycles of period " << y.period() << "\n";
        } else if (fit->parsed()) {
            const auto f = parma::cli::cmd_fit(cfg);
            std::cout << "fitted " << parma::to_string(f.model.kind()) << " on " << f.cycles << " cycles\n";
        } else if (compress->parsed()) {
            const auto r = parma::cli::cmd_compress(cfg);
            std::cout << "retained " << r.retained_parameters << " of " << r.original_parameters << " parameters\n";
        } else if (diagnose->parsed()) {
            const auto d = parma::cli::cmd_diagnose(cfg);
            for (const auto& t : d.box_pierce) {
                std::cout << "box-pierce lag " << t.lag << ": Q = " << t.result.statistic
                          << ", p = " << t.result.p_value << "\n";
            }
            std::cout << "ks: D = " << d.ks.statistic << ", p = " << d.ks.p_value << "\n";
        } else if (reproduce->parsed()) {
            const auto r = parma::cli::cmd_reproduce_sim(cfg);
            for (const auto& m : r.models) {
                std::cout << m.name << ": " << m.parameters << " parameters, ks p = " << m.diagnostics.ks.p_value;
                for (const auto& t : m.diagnostics.box_pierce) {
                    std::cout << ", bp(" << t.lag << ") p = " << t.result.p_value;
                }
                std::cout << "\n";
            }
        }
    } catch (const parma::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return exit_code(e.category());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: InvalidArgument: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << "\n";
        return kNumerical;
    }
    return kOk;
}
