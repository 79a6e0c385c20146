#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using namespace parma;

namespace {

const fs::path kGolden = fs::path(PARMA_TEST_DATA_DIR) / "golden";

std::string first_line(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
}

void expect_header(const fs::path& file, const std::string& golden) {
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(first_line(file), first_line(kGolden / golden)) << file;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("parma_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    cli::RunConfig config(const std::string& sub) const {
        cli::RunConfig c;
        c.outdir = dir_ / sub;
        c.cycles = 200;
        c.seed = 5;
        return c;
    }

    int run_tool(const std::string& args) const {
        const std::string cmd = std::string(PARMA_TOOL_PATH) + " " + args + " > " + (dir_ / "stdout.txt").string() +
                                " 2> " + (dir_ / "stderr.txt").string();
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string stderr_text() const {
        std::ifstream in(dir_ / "stderr.txt");
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SimulateFitCompressDiagnoseArtifacts) {
    auto sim = config("sim");
    cli::cmd_simulate(sim);
    expect_header(dir_ / "sim/series.csv", "series.csv.header");
    ASSERT_TRUE(fs::exists(dir_ / "sim/manifest.json"));

    auto fit = config("fit");
    fit.input = dir_ / "sim/series.csv";
    cli::cmd_fit(fit);
    expect_header(dir_ / "fit/psi.csv", "psi.csv.header");
    expect_header(dir_ / "fit/innovations_v.csv", "innovations_v.csv.header");
    expect_header(dir_ / "fit/innovations_theta.csv", "innovations_theta.csv.header");

    std::ifstream keys(kGolden / "model.json.keys");
    const auto model = nlohmann::ordered_json::parse(std::ifstream(dir_ / "fit/model.json"));
    std::vector<std::string> actual;
    for (const auto& [k, v] : model.items()) {
        actual.push_back(k);
    }
    std::vector<std::string> expected;
    for (std::string k; std::getline(keys, k);) {
        expected.push_back(k);
    }
    EXPECT_EQ(actual, expected);

    auto comp = config("compress");
    comp.input = fit.input;
    comp.transform = TransformKind::Fourier;
    const auto result = cli::cmd_compress(comp);
    expect_header(dir_ / "compress/coeffs.csv", "coeffs.csv.header");
    const auto manifest = nlohmann::json::parse(std::ifstream(dir_ / "compress/manifest.json"));
    EXPECT_EQ(manifest.at("retained_parameters").get<std::size_t>(), result.retained_parameters);
    EXPECT_EQ(manifest.at("config").at("seed").get<std::uint64_t>(), 5u);

    auto diag = config("diag");
    diag.input = fit.input;
    diag.model_json = dir_ / "compress/model.json";
    diag.svg = true;
    const auto d = cli::cmd_diagnose(diag);
    expect_header(dir_ / "diag/residuals.csv", "residuals.csv.header");
    expect_header(dir_ / "diag/acf.csv", "acf.csv.header");
    expect_header(dir_ / "diag/boxpierce.csv", "boxpierce.csv.header");
    expect_header(dir_ / "diag/histogram.csv", "histogram.csv.header");
    expect_header(dir_ / "diag/histogram_curve.csv", "histogram_curve.csv.header");
    EXPECT_TRUE(fs::exists(dir_ / "diag/ks.txt"));
    EXPECT_TRUE(fs::exists(dir_ / "diag/acf.svg"));
    EXPECT_EQ(d.box_pierce.size(), 2u);
    EXPECT_EQ(d.residuals.size(), 200u * 12u - 1u);
}

TEST_F(CliTest, ReproduceSimIsDeterministic) {
    auto cfg = config("a");
    const auto a = cli::cmd_reproduce_sim(cfg);
    cfg.outdir.reset();
    const auto b = cli::cmd_reproduce_sim(cfg);
    ASSERT_EQ(a.models.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(a.models[i].parameters, b.models[i].parameters);
        EXPECT_EQ(a.models[i].diagnostics.ks.p_value, b.models[i].diagnostics.ks.p_value);
    }
    EXPECT_EQ(a.find("parma").parameters, 24u);
    expect_header(dir_ / "a/comparison.csv", "comparison.csv.header");
}

TEST_F(CliTest, StationaryAr1FitIsNearConstant) {
    auto sim = config("sim");
    sim.period = 4;
    sim.model = ModelKind::Par1;
    sim.cycles = 5000;
    sim.model_json = dir_ / "ar1.json";
    write_model_json(sim.model_json,
                     ParmaModel::par1(SeasonalVector::constant(4, 1.0, ParameterRole::Mu),
                                      SeasonalVector::constant(4, 0.6, ParameterRole::Phi),
                                      SeasonalVector::constant(4, 1.0, ParameterRole::Sigma2)));
    cli::cmd_simulate(sim);
    auto fit = sim;
    fit.input = dir_ / "sim/series.csv";
    fit.outdir = dir_ / "fit";
    const auto f = cli::cmd_fit(fit);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(f.model.phi()[i], 0.6, 0.05);
    }
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run_tool("reproduce-sim --cycles 50 --outdir " + (dir_ / "ok").string()), 0);
    EXPECT_EQ(run_tool("fit --alpha 2 --input x.csv"), 2);
    EXPECT_NE(stderr_text().find("InvalidAlpha"), std::string::npos);
    EXPECT_EQ(run_tool("fit --wavelet db3"), 2);
    EXPECT_EQ(run_tool("bogus"), 2);
    EXPECT_EQ(run_tool("fit --input " + (dir_ / "missing.csv").string()), 3);
    EXPECT_NE(stderr_text().find("UnreadableFile"), std::string::npos);

    std::ofstream(dir_ / "short.csv") << "cycle,season,value\n0,0,1\n0,1,2\n0,2,3\n";
    EXPECT_EQ(run_tool("fit --input " + (dir_ / "short.csv").string()), 3);
    EXPECT_NE(stderr_text().find("IncompleteCycle"), std::string::npos);

    // constant data: every autocovariance is zero and the recursion breaks down
    std::ofstream flat(dir_ / "flat.csv");
    flat << "cycle,season,value\n";
    for (int c = 0; c < 10; ++c) {
        for (int s = 0; s < 12; ++s) {
            flat << c << ',' << s << ",0\n";
        }
    }
    flat.close();
    EXPECT_EQ(run_tool("fit --input " + (dir_ / "flat.csv").string() + " --outdir " + (dir_ / "flat").string()), 4);
    EXPECT_NE(stderr_text().find("NonPositivePredictionVariance"), std::string::npos);
}
