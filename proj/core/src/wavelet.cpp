#include "parma/wavelet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "coefficient_test.hpp"
#include "wavelet_filters.hpp"

namespace parma {

namespace {

constexpr double kOrthogonalityTolerance = 1e-10;

// One analysis stage on a periodic signal of even length m:
// a_k = sum_l g_l x_{(2k+l) mod m}, d_k = sum_l h_l x_{(2k+l) mod m}, h_l = (-1)^l g_{L-1-l}.
void analysis_stage(std::span<const double> g, const std::vector<double>& x, std::vector<double>& approx,
                    std::vector<double>& detail) {
    const std::size_t m = x.size();
    const std::size_t taps = g.size();
    approx.assign(m / 2, 0.0);
    detail.assign(m / 2, 0.0);
    for (std::size_t k = 0; k < m / 2; ++k) {
        for (std::size_t l = 0; l < taps; ++l) {
            const double xv = x[(2 * k + l) % m];
            const double h = (l % 2 == 0 ? 1.0 : -1.0) * g[taps - 1 - l];
            approx[k] += g[l] * xv;
            detail[k] += h * xv;
        }
    }
}

std::vector<double> cascade(std::span<const double> g, std::vector<double> x) {
    const std::size_t n = x.size();
    std::vector<double> out(n);
    std::vector<double> approx;
    std::vector<double> detail;
    // finest details fill the tail of the output, coarser ones move to the front
    std::size_t end = n;
    while (x.size() > 1) {
        analysis_stage(g, x, approx, detail);
        const std::size_t half = detail.size();
        std::copy(detail.begin(), detail.end(), out.begin() + static_cast<std::ptrdiff_t>(end - half));
        end -= half;
        x.swap(approx);
    }
    out[0] = x[0];
    return out;
}

Matrix build_dwt_matrix(const WaveletSpec& spec, std::size_t length) {
    const auto n = static_cast<Eigen::Index>(length);
    Matrix w(n, n);
    for (std::size_t c = 0; c < length; ++c) {
        std::vector<double> unit(length, 0.0);
        unit[c] = 1.0;
        const std::vector<double> column = cascade(spec.scaling_filter(), std::move(unit));
        for (std::size_t r = 0; r < length; ++r) {
            w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = column[r];
        }
    }
    const double err = (w * w.transpose() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > kOrthogonalityTolerance) {
        throw numerical_error("DwtNotOrthogonal", spec.name() + " DWT of length " + std::to_string(length) +
                                                      " deviates from orthogonality by " + std::to_string(err));
    }
    return w;
}

std::size_t log2_exact(std::size_t n) {
    std::size_t j = 0;
    while ((std::size_t{1} << j) < n) {
        ++j;
    }
    return j;
}

}  // namespace

WaveletSpec WaveletSpec::least_asymmetric(int vanishing_moments) {
    if (vanishing_moments < 1 || vanishing_moments > 10) {
        throw std::invalid_argument("least asymmetric wavelets support 1..10 vanishing moments");
    }
    return {WaveletFamily::LeastAsymmetric, vanishing_moments};
}

WaveletSpec WaveletSpec::parse(const std::string& name) {
    if (name == "haar") {
        return haar();
    }
    if (name.size() >= 3 && name.compare(0, 2, "la") == 0) {
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(name.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == name.size() - 2 && k >= 1 && k <= 10) {
            return least_asymmetric(k);
        }
    }
    throw config_error("UnknownWavelet", "unknown wavelet '" + name + "' (expected haar or la1..la10)");
}

std::string WaveletSpec::name() const {
    return family == WaveletFamily::Haar ? "haar" : "la" + std::to_string(vanishing_moments);
}

std::span<const double> WaveletSpec::scaling_filter() const {
    return detail::scaling_filter(family == WaveletFamily::Haar ? 1 : vanishing_moments);
}

const Matrix& dwt_matrix(const WaveletSpec& spec, std::size_t length) {
    if (length < 2 || !is_power_of_two(length)) {
        throw std::invalid_argument("dwt_matrix: length " + std::to_string(length) +
                                    " must be a power of two >= 2");
    }
    static std::mutex mutex;
    static std::map<std::pair<std::string, std::size_t>, Matrix> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_pair(spec.name(), length);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, build_dwt_matrix(spec, length)).first;
    }
    return it->second;
}

std::pair<std::size_t, std::size_t> DwtCoeffs::block(std::size_t j) const {
    if (j == 0 || j > levels) {
        throw std::out_of_range("DwtCoeffs::block: level out of range");
    }
    const std::size_t size = std::size_t{1} << (j - 1);
    return {size, size};
}

DwtCoeffs to_dwt(std::span<const double> x, const WaveletSpec& spec) {
    const Matrix& w = dwt_matrix(spec, x.size());
    const Vector xv = Eigen::Map<const Vector>(x.data(), static_cast<Eigen::Index>(x.size()));
    const Vector out = w * xv;
    return DwtCoeffs{std::vector<double>(out.data(), out.data() + out.size()), x.size(), log2_exact(x.size())};
}

std::vector<double> from_dwt(const DwtCoeffs& w, const WaveletSpec& spec) {
    if (w.values.size() != w.length) {
        throw std::invalid_argument("from_dwt: coefficient count does not match length");
    }
    const Matrix& m = dwt_matrix(spec, w.length);
    const Vector wv = Eigen::Map<const Vector>(w.values.data(), static_cast<Eigen::Index>(w.length));
    const Vector x = m.transpose() * wv;
    return std::vector<double>(x.data(), x.data() + x.size());
}

CovMatrix dwt_cov(const CovMatrix& sigma, const WaveletSpec& spec) {
    const Matrix& w = dwt_matrix(spec, sigma.dim());
    return CovMatrix(w * sigma.matrix() * w.transpose(), {CovSource::Transformed, sigma.provenance().extended});
}

std::string dwt_label(std::size_t index) {
    if (index == 0) {
        return "V";
    }
    // index in [2^{j-1}, 2^j) belongs to block W_j
    std::size_t j = 1;
    while ((std::size_t{1} << j) <= index) {
        ++j;
    }
    const std::size_t start = std::size_t{1} << (j - 1);
    return "W" + std::to_string(j) + "." + std::to_string(index - start);
}

TransformReport wavelet_test(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles, double alpha,
                             const WaveletSpec& spec) {
    const std::size_t nu = estimate.size();
    if (sigma.dim() != nu) {
        throw std::invalid_argument("wavelet_test: covariance dimension does not match the period");
    }
    if (cycles == 0) {
        throw std::invalid_argument("wavelet_test: cycles must be positive");
    }
    const std::size_t extended = std::max<std::size_t>(2, next_power_of_two(nu));
    const std::vector<double> x = periodic_extend_vector(estimate, extended);
    const CovMatrix sigma_ext = periodic_extend_cov(sigma, extended);
    const DwtCoeffs w = to_dwt(x, spec);
    const CovMatrix r = dwt_cov(sigma_ext, spec);

    TransformReport report;
    report.transform = TransformKind::Wavelet;
    report.basis = spec.name();
    report.role = estimate.role();
    report.period = nu;
    report.transform_length = extended;
    report.cycles = cycles;
    report.alpha = alpha;
    detail::test_coefficients(report, w.values, r.matrix(), dwt_label);

    DwtCoeffs kept{report.compressed_coefficients, extended, w.levels};
    std::vector<double> full = from_dwt(kept, spec);
    full.resize(nu);
    report.reconstructed = std::move(full);
    return report;
}

}  // namespace parma
