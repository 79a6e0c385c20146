#include "commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <parma/simulate.hpp>
#include <parma/wavelet.hpp>

#include "svg.hpp"

namespace parma::cli {

namespace {

constexpr const char* kToolVersion = "0.3.0";

using Json = nlohmann::ordered_json;

std::ostringstream csv() {
    std::ostringstream out;
    out << std::setprecision(12);
    return out;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& text) {
    if (cfg.outdir) {
        write_text_file(*cfg.outdir / name, text);
    }
}

Json config_json(const RunConfig& cfg) {
    Json j;
    j["period"] = cfg.period;
    j["model"] = to_string(cfg.model);
    j["iterations"] = cfg.iterations;
    j["alpha"] = cfg.alpha;
    j["wavelet"] = cfg.wavelet;
    j["transform"] = to_string(cfg.transform);
    j["seed"] = cfg.seed;
    j["cycles"] = cfg.cycles;
    j["burn_in_cycles"] = cfg.burn_in_cycles;
    j["lags"] = cfg.lags;
    j["acf_lags"] = cfg.acf_lags;
    j["bins"] = cfg.bins;
    j["input"] = cfg.input.string();
    j["model_json"] = cfg.model_json.string();
    return j;
}

void emit_manifest(const RunConfig& cfg, const std::string& command, Json extra) {
    Json j;
    j["schema"] = "parma-manifest/1";
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config_json(cfg);
    for (auto& [k, v] : extra.items()) {
        j[k] = v;
    }
    emit(cfg, "manifest.json", j.dump(2) + "\n");
}

PeriodicSeries load_series(const RunConfig& cfg) {
    if (cfg.input.empty()) {
        throw config_error("MissingInput", "this command needs --input");
    }
    ColumnSpec spec = cfg.columns;
    spec.period = cfg.period;
    return ingest_csv(cfg.input, spec);
}

FitOptions fit_options(const RunConfig& cfg) {
    FitOptions o;
    o.iterations = cfg.iterations;
    return o;
}

ParmaFit fit_series(const PeriodicSeries& y, const RunConfig& cfg) {
    return cfg.model == ModelKind::Par1 ? fit_par1(y, fit_options(cfg)) : fit_parma11(y, fit_options(cfg));
}

Provenance fit_provenance(const RunConfig& cfg, const std::string& stage) {
    return {{"stage", stage},
            {"estimator", "innovations"},
            {"iterations", std::to_string(cfg.iterations)},
            {"input", cfg.input.string()},
            {"tool_version", kToolVersion}};
}

std::string psi_csv(const ParmaFit& fit) {
    const std::size_t n = fit.state.iterations();
    const PsiEstimate all = psi_sigma_from_innovations(fit.state, n, n);
    auto out = csv();
    out << "season";
    for (std::size_t j = 1; j <= n; ++j) {
        out << ",psi_" << j;
    }
    out << ",sigma2\n";
    for (std::size_t i = 0; i < fit.model.period(); ++i) {
        out << i;
        for (std::size_t j = 1; j <= n; ++j) {
            out << ',' << all.lag(j)[i];
        }
        out << ',' << all.sigma2[i] << '\n';
    }
    return out.str();
}

std::string innovations_v_csv(const InnovationsState& s) {
    auto out = csv();
    out << "n,season,v\n";
    for (std::size_t n = 0; n <= s.iterations(); ++n) {
        for (std::size_t i = 0; i < s.period(); ++i) {
            out << n << ',' << i << ',' << s.v(n, i) << '\n';
        }
    }
    return out.str();
}

std::string innovations_theta_csv(const InnovationsState& s) {
    auto out = csv();
    out << "n,j,season,theta\n";
    for (std::size_t n = 1; n <= s.iterations(); ++n) {
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t i = 0; i < s.period(); ++i) {
                out << n << ',' << j << ',' << i << ',' << s.theta(n, j, i) << '\n';
            }
        }
    }
    return out.str();
}

std::string coeffs_csv(const std::vector<TransformReport>& reports) {
    auto out = csv();
    out << "parameter,index,label,value,se,z,significant,retained\n";
    for (const TransformReport& r : reports) {
        for (const CoefficientTest& c : r.coefficients) {
            out << to_string(r.role) << ',' << c.index << ',' << c.label << ',' << c.value << ',' << c.se << ',';
            if (c.tested) {
                out << c.z;
            }
            out << ',' << (c.significant ? 1 : 0) << ',' << (c.retained ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

Json report_json(const TransformReport& r) {
    Json j;
    j["parameter"] = to_string(r.role);
    j["transform"] = to_string(r.transform);
    j["basis"] = r.basis;
    j["transform_length"] = r.transform_length;
    j["threshold"] = r.threshold;
    j["retained"] = r.retained_count();
    j["significant"] = r.significant_count();
    return j;
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.period < 2) {
        throw config_error("InvalidPeriod", "period must be at least 2");
    }
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw config_error("InvalidAlpha", "alpha must lie in (0, 1)");
    }
    if (cfg.iterations < (cfg.model == ModelKind::Parma11 ? 2u : 1u)) {
        throw config_error("InvalidIterations", "too few innovations iterations for the chosen model");
    }
    if (cfg.cycles < 1) {
        throw config_error("InvalidCycles", "cycles must be at least 1");
    }
    if (cfg.lags.empty() || std::find(cfg.lags.begin(), cfg.lags.end(), 0u) != cfg.lags.end()) {
        throw config_error("InvalidLags", "lags must be a non-empty list of positive integers");
    }
    if (cfg.bins < 1) {
        throw config_error("InvalidBins", "bins must be at least 1");
    }
    (void)WaveletSpec::parse(cfg.wavelet);
}

double DiagnosticsReport::box_pierce_p(std::size_t lag) const {
    for (const LagTest& t : box_pierce) {
        if (t.lag == lag) {
            return t.result.p_value;
        }
    }
    throw std::out_of_range("no Box-Pierce result at lag " + std::to_string(lag));
}

const ModelSummary& ReproduceReport::find(const std::string& name) const {
    for (const ModelSummary& m : models) {
        if (m.name == name) {
            return m;
        }
    }
    throw std::out_of_range("no model named " + name);
}

PeriodicSeries cmd_simulate(const RunConfig& cfg) {
    validate(cfg);
    std::optional<ParmaModel> model;
    if (!cfg.model_json.empty()) {
        model = read_model_json(cfg.model_json).model;
    } else if (cfg.model == ModelKind::Parma11 && cfg.period == 12) {
        model = benchmark_parma11_model();
    } else {
        throw config_error("MissingModel", "simulate needs --model-json unless simulating the 12-season benchmark");
    }
    if (model->period() != cfg.period) {
        throw config_error("PeriodMismatch", "model period " + std::to_string(model->period()) +
                                                 " differs from --period " + std::to_string(cfg.period));
    }
    const PeriodicSeries y = simulate(SimConfig{*model, cfg.cycles, cfg.burn_in_cycles, cfg.seed, 1.0});
    if (cfg.outdir) {
        write_series_csv(*cfg.outdir / "series.csv", y);
        Json extra;
        extra["model"] = Json::parse(model_to_json(*model, {{"stage", "simulation-truth"}}));
        extra["outputs"] = {"series.csv"};
        emit_manifest(cfg, "simulate", extra);
        if (cfg.svg) {
            emit(cfg, "series.svg", svg_line_plot({y.values().begin(), y.values().end()}, "Simulated series"));
        }
    }
    return y;
}

ParmaFit cmd_fit(const RunConfig& cfg) {
    validate(cfg);
    const PeriodicSeries y = load_series(cfg);
    ParmaFit fit = fit_series(y, cfg);
    if (cfg.outdir) {
        write_model_json(*cfg.outdir / "model.json", fit.model, fit_provenance(cfg, "fit"));
        emit(cfg, "psi.csv", psi_csv(fit));
        emit(cfg, "innovations_v.csv", innovations_v_csv(fit.state));
        emit(cfg, "innovations_theta.csv", innovations_theta_csv(fit.state));
        Json extra;
        extra["cycles"] = y.cycles();
        extra["outputs"] = {"model.json", "psi.csv", "innovations_v.csv", "innovations_theta.csv"};
        emit_manifest(cfg, "fit", extra);
    }
    return fit;
}

CompressionResult cmd_compress(const RunConfig& cfg) {
    validate(cfg);
    const PeriodicSeries y = load_series(cfg);
    const ParmaFit fit = fit_series(y, cfg);
    CompressionSettings settings;
    settings.transform = cfg.transform;
    settings.wavelet = WaveletSpec::parse(cfg.wavelet);
    settings.alpha = cfg.alpha;
    CompressionResult result = compress_model(fit, settings);
    if (cfg.outdir) {
        Provenance prov = fit_provenance(cfg, "compressed");
        prov["transform"] = to_string(cfg.transform);
        prov["basis"] = result.reports.front().basis;
        prov["alpha"] = std::to_string(cfg.alpha);
        prov["retained_parameters"] = std::to_string(result.retained_parameters);
        write_model_json(*cfg.outdir / "model.json", result.model, prov);
        emit(cfg, "coeffs.csv", coeffs_csv(result.reports));
        Json extra;
        extra["retained_parameters"] = result.retained_parameters;
        extra["original_parameters"] = result.original_parameters;
        extra["reports"] = Json::array();
        for (const TransformReport& r : result.reports) {
            extra["reports"].push_back(report_json(r));
        }
        extra["outputs"] = {"model.json", "coeffs.csv"};
        emit_manifest(cfg, "compress", extra);
    }
    return result;
}

DiagnosticsReport diagnose(const ParmaModel& model, const PeriodicSeries& y, const RunConfig& cfg,
                           const std::string& prefix) {
    DiagnosticsReport d;
    d.residuals = residuals(model, y);
    d.acf = acf(d.residuals, std::min(cfg.acf_lags, d.residuals.size() - 1));
    for (std::size_t lag : cfg.lags) {
        d.box_pierce.push_back({lag, box_pierce(d.residuals, lag)});
    }
    d.ks = ks_normal(d.residuals);
    d.histogram = histogram(d.residuals, cfg.bins);

    if (cfg.outdir) {
        auto res = csv();
        res << "t,season,residual\n";
        for (std::size_t k = 0; k < d.residuals.size(); ++k) {
            res << k + 1 << ',' << (k + 1) % y.period() << ',' << d.residuals[k] << '\n';
        }
        emit(cfg, prefix + "residuals.csv", res.str());

        auto ac = csv();
        ac << "lag,rho,band\n";
        for (std::size_t k = 0; k < d.acf.rho.size(); ++k) {
            ac << k + 1 << ',' << d.acf.rho[k] << ',' << d.acf.band << '\n';
        }
        emit(cfg, prefix + "acf.csv", ac.str());

        auto bp = csv();
        bp << "lag,Q,p\n";
        for (const LagTest& t : d.box_pierce) {
            bp << t.lag << ',' << t.result.statistic << ',' << t.result.p_value << '\n';
        }
        emit(cfg, prefix + "boxpierce.csv", bp.str());

        auto ks = csv();
        ks << "test: one-sample Kolmogorov-Smirnov against N(0,1) on standardized residuals\n"
           << "n: " << d.residuals.size() << "\nstatistic: " << d.ks.statistic << "\np_value: " << d.ks.p_value
           << '\n';
        emit(cfg, prefix + "ks.txt", ks.str());

        auto hist = csv();
        hist << "bin,lower,upper,count,density\n";
        for (std::size_t b = 0; b < d.histogram.counts.size(); ++b) {
            hist << b << ',' << d.histogram.edges[b] << ',' << d.histogram.edges[b + 1] << ','
                 << d.histogram.counts[b] << ',' << d.histogram.density[b] << '\n';
        }
        emit(cfg, prefix + "histogram.csv", hist.str());

        auto curve = csv();
        curve << "x,normal_pdf\n";
        for (std::size_t i = 0; i < d.histogram.curve_x.size(); ++i) {
            curve << d.histogram.curve_x[i] << ',' << d.histogram.curve_pdf[i] << '\n';
        }
        emit(cfg, prefix + "histogram_curve.csv", curve.str());

        if (cfg.svg) {
            emit(cfg, prefix + "residuals.svg", svg_line_plot(d.residuals, "Residuals"));
            emit(cfg, prefix + "acf.svg", svg_stem_plot(d.acf.rho, d.acf.band, "Residual ACF"));
        }
    }
    return d;
}

DiagnosticsReport cmd_diagnose(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.model_json.empty()) {
        throw config_error("MissingModel", "diagnose needs --model-json");
    }
    const ModelDocument doc = read_model_json(cfg.model_json);
    if (doc.model.period() != cfg.period) {
        throw config_error("PeriodMismatch", "model period differs from --period");
    }
    const PeriodicSeries y = load_series(cfg);
    DiagnosticsReport d = diagnose(doc.model, y, cfg);
    if (cfg.outdir) {
        Json extra;
        extra["outputs"] = {"residuals.csv", "acf.csv", "boxpierce.csv", "ks.txt", "histogram.csv",
                            "histogram_curve.csv"};
        emit_manifest(cfg, "diagnose", extra);
    }
    return d;
}

ReproduceReport cmd_reproduce_sim(const RunConfig& cfg) {
    validate(cfg);
    if (cfg.period != 12 || cfg.model != ModelKind::Parma11) {
        throw config_error("InvalidPeriod", "reproduce-sim runs the 12-season PARMA(1,1) benchmark only");
    }
    const ParmaModel truth = benchmark_parma11_model();
    const PeriodicSeries y = simulate(SimConfig{truth, cfg.cycles, cfg.burn_in_cycles, cfg.seed, 1.0});
    const ParmaFit fit = fit_parma11(y, fit_options(cfg));

    CompressionSettings fourier;
    fourier.transform = TransformKind::Fourier;
    fourier.alpha = cfg.alpha;
    CompressionSettings wavelet;
    wavelet.transform = TransformKind::Wavelet;
    wavelet.wavelet = WaveletSpec::parse(cfg.wavelet);
    wavelet.alpha = cfg.alpha;
    CompressionResult fc = compress_model(fit, fourier);
    CompressionResult wc = compress_model(fit, wavelet);

    ReproduceReport report;
    report.seed = cfg.seed;
    report.fourier = fc.reports;
    report.wavelet = wc.reports;
    report.models.push_back({"parma", fit.model, fit.model.parameter_count(), diagnose(fit.model, y, cfg, "parma_")});
    report.models.push_back(
        {"fourier-parma", fc.model, fc.retained_parameters, diagnose(fc.model, y, cfg, "fourier_")});
    report.models.push_back(
        {"wavelet-parma", wc.model, wc.retained_parameters, diagnose(wc.model, y, cfg, "wavelet_")});

    if (cfg.outdir) {
        write_series_csv(*cfg.outdir / "series.csv", y);
        write_model_json(*cfg.outdir / "truth_model.json", truth, {{"stage", "simulation-truth"}});
        write_model_json(*cfg.outdir / "parma_model.json", fit.model, fit_provenance(cfg, "fit"));
        write_model_json(*cfg.outdir / "fourier_model.json", fc.model, fit_provenance(cfg, "fourier-compressed"));
        write_model_json(*cfg.outdir / "wavelet_model.json", wc.model, fit_provenance(cfg, "wavelet-compressed"));
        emit(cfg, "fourier_coeffs.csv", coeffs_csv(fc.reports));
        emit(cfg, "wavelet_coeffs.csv", coeffs_csv(wc.reports));

        auto cmp = csv();
        cmp << "model,parameters";
        for (std::size_t lag : cfg.lags) {
            cmp << ",bp_p_lag" << lag;
        }
        cmp << ",ks_statistic,ks_p\n";
        for (const ModelSummary& m : report.models) {
            cmp << m.name << ',' << m.parameters;
            for (const LagTest& t : m.diagnostics.box_pierce) {
                cmp << ',' << t.result.p_value;
            }
            cmp << ',' << m.diagnostics.ks.statistic << ',' << m.diagnostics.ks.p_value << '\n';
        }
        emit(cfg, "comparison.csv", cmp.str());

        Json extra;
        extra["retained_parameters"] = {{"parma", fit.model.parameter_count()},
                                        {"fourier-parma", fc.retained_parameters},
                                        {"wavelet-parma", wc.retained_parameters}};
        extra["outputs"] = {"series.csv", "comparison.csv", "fourier_coeffs.csv", "wavelet_coeffs.csv"};
        emit_manifest(cfg, "reproduce-sim", extra);
    }
    return report;
}

}  // namespace parma::cli
