#include "parma/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "parma/errors.hpp"
#include "parma/stats.hpp"

namespace parma {

namespace {

constexpr std::size_t kCurvePoints = 200;

double mean_of(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

AcfResult acf(std::span<const double> x, std::size_t max_lag) {
    const std::size_t n = x.size();
    if (n <= max_lag) {
        throw std::invalid_argument("acf: series length must exceed max_lag");
    }
    const double m = mean_of(x);
    double denom = 0.0;
    for (double v : x) {
        denom += (v - m) * (v - m);
    }
    if (!(denom > 0.0)) {
        throw numerical_error("ZeroVariance", "acf: input has zero variance");
    }
    AcfResult out;
    out.rho.reserve(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            num += (x[t] - m) * (x[t + k] - m);
        }
        out.rho.push_back(num / denom);
    }
    out.band = 1.96 / std::sqrt(static_cast<double>(n));
    return out;
}

TestResult box_pierce(std::span<const double> x, std::size_t lag) {
    if (lag == 0) {
        throw std::invalid_argument("box_pierce: lag must be positive");
    }
    const AcfResult r = acf(x, lag);
    double q = 0.0;
    for (double rho : r.rho) {
        q += rho * rho;
    }
    q *= static_cast<double>(x.size());
    double p = stats::chi_square_sf(q, lag);
    // a far-tail statistic underflows; keep the p-value strictly positive
    p = std::max(p, std::numeric_limits<double>::min());
    return {q, q == 0.0 ? 1.0 : p};
}

TestResult ks_normal(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 8) {
        throw std::invalid_argument("ks_normal: needs at least 8 observations");
    }
    const double m = mean_of(x);
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) {
        throw numerical_error("ZeroVariance", "ks_normal: input has zero variance");
    }
    std::vector<double> z(x.begin(), x.end());
    for (double& v : z) {
        v = (v - m) / sd;
    }
    std::sort(z.begin(), z.end());
    const double nd = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = stats::normal_cdf(z[i]);
        d = std::max({d, static_cast<double>(i + 1) / nd - f, f - static_cast<double>(i) / nd});
    }
    return {d, stats::kolmogorov_sf(std::sqrt(nd) * d)};
}

Histogram histogram(std::span<const double> x, std::size_t bins) {
    if (bins == 0) {
        throw std::invalid_argument("histogram: bins must be at least 1");
    }
    if (x.empty()) {
        throw std::invalid_argument("histogram: empty input");
    }
    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    const double lo = *lo_it;
    double hi = *hi_it;
    if (hi == lo) {
        hi = lo + 1.0;
    }
    const double width = (hi - lo) / static_cast<double>(bins);

    Histogram h;
    h.edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b) {
        h.edges[b] = lo + width * static_cast<double>(b);
    }
    h.edges[bins] = hi;
    h.counts.assign(bins, 0);
    for (double v : x) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        h.counts[std::min(b, bins - 1)] += 1;  // the maximum lands in the last bin
    }
    const double n = static_cast<double>(x.size());
    for (std::size_t c : h.counts) {
        h.density.push_back(static_cast<double>(c) / (n * width));
    }

    const double m = mean_of(x);
    double ss = 0.0;
    for (double v : x) {
        ss += (v - m) * (v - m);
    }
    const double sd = x.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    for (std::size_t i = 0; i < kCurvePoints; ++i) {
        const double cx = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kCurvePoints - 1);
        h.curve_x.push_back(cx);
        if (sd > 0.0) {
            const double u = (cx - m) / sd;
            h.curve_pdf.push_back(std::exp(-0.5 * u * u) / (sd * std::sqrt(2.0 * std::numbers::pi)));
        } else {
            h.curve_pdf.push_back(0.0);
        }
    }
    return h;
}

}  // namespace parma
