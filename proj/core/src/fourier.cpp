#include "parma/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coefficient_test.hpp"

namespace parma {

namespace {

constexpr double kImagTolerance = 1e-12;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

LpuFactors lpu_matrices(std::size_t period) {
    if (period == 0) {
        throw std::invalid_argument("lpu_matrices: period must be positive");
    }
    using C = std::complex<double>;
    const std::size_t nu = period;
    const double nu_d = static_cast<double>(nu);
    const bool even = nu % 2 == 0;
    const double root_half = std::sqrt(0.5);

    LpuFactors out;
    out.l = Vector::Constant(idx(nu), std::sqrt(2.0 / nu_d));
    out.l(0) = 1.0 / std::sqrt(nu_d);
    if (even) {
        out.l(idx(nu - 1)) = 1.0 / std::sqrt(nu_d);
    }

    out.p = ComplexMatrix::Zero(idx(nu), idx(nu));
    out.p(0, 0) = 1.0;
    for (std::size_t r = 1; r <= (nu - 1) / 2; ++r) {
        out.p(idx(2 * r - 1), idx(r)) = root_half;
        out.p(idx(2 * r - 1), idx(nu - r)) = root_half;
        out.p(idx(2 * r), idx(r)) = C(0.0, root_half);
        out.p(idx(2 * r), idx(nu - r)) = C(0.0, -root_half);
    }
    if (even) {
        out.p(idx(nu - 1), idx(nu / 2)) = 1.0;
    }

    out.u.resize(idx(nu), idx(nu));
    for (std::size_t r = 0; r < nu; ++r) {
        for (std::size_t t = 0; t < nu; ++t) {
            // reduce r*t mod nu first to keep the angle small
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((r * t) % nu) / nu_d;
            out.u(idx(r), idx(t)) = std::polar(1.0 / std::sqrt(nu_d), angle);
        }
    }
    return out;
}

Matrix fourier_matrix(std::size_t period) {
    const LpuFactors f = lpu_matrices(period);
    const ComplexMatrix g = f.l.cast<std::complex<double>>().asDiagonal() * f.p * f.u;
    const double residue = g.imag().cwiseAbs().maxCoeff();
    if (residue > kImagTolerance) {
        throw numerical_error("FourierImaginaryResidue",
                              "L P U has imaginary residue " + std::to_string(residue));
    }
    return g.real();
}

std::string fourier_label(std::size_t index, std::size_t period) {
    if (index == 0) {
        return "c0";
    }
    if (period % 2 == 0 && index == period - 1) {
        return "c" + std::to_string(period / 2);
    }
    const std::size_t r = (index + 1) / 2;
    return (index % 2 == 1 ? "c" : "s") + std::to_string(r);
}

FourierCoeffs to_fourier(std::span<const double> x) {
    const Matrix g = fourier_matrix(x.size());
    const Vector xv = Eigen::Map<const Vector>(x.data(), idx(x.size()));
    const Vector f = g * xv;
    return FourierCoeffs{std::vector<double>(f.data(), f.data() + f.size()), x.size()};
}

FourierCoeffs to_fourier(const SeasonalVector& x) { return to_fourier(x.entries()); }

std::vector<double> from_fourier(const FourierCoeffs& f) {
    if (f.values.size() != f.period || f.period == 0) {
        throw std::invalid_argument("from_fourier: coefficient count must equal the period");
    }
    const LpuFactors lpu = lpu_matrices(f.period);
    const Vector fv = Eigen::Map<const Vector>(f.values.data(), idx(f.period));
    const Vector scaled = fv.cwiseQuotient(lpu.l);
    const Eigen::VectorXcd x = lpu.u.adjoint() * (lpu.p.adjoint() * scaled.cast<std::complex<double>>());
    const double residue = x.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-9 * std::max(1.0, x.real().cwiseAbs().maxCoeff())) {
        throw numerical_error("FourierImaginaryResidue",
                              "inverse Fourier map has imaginary residue " + std::to_string(residue));
    }
    const Vector re = x.real();
    return std::vector<double>(re.data(), re.data() + re.size());
}

SeasonalVector from_fourier(const FourierCoeffs& f, ParameterRole role) {
    return SeasonalVector(from_fourier(f), role);
}

TransformReport fourier_test(const SeasonalVector& estimate, const CovMatrix& sigma, std::size_t cycles,
                             double alpha) {
    const std::size_t nu = estimate.size();
    if (sigma.dim() != nu) {
        throw std::invalid_argument("fourier_test: covariance dimension does not match the period");
    }
    if (cycles == 0) {
        throw std::invalid_argument("fourier_test: cycles must be positive");
    }
    if (nu < 2) {
        throw std::invalid_argument("fourier_test: period must be at least 2");
    }
    const Matrix g = fourier_matrix(nu);
    const Matrix r = g * sigma.matrix() * g.transpose();
    const FourierCoeffs f = to_fourier(estimate);

    TransformReport report;
    report.transform = TransformKind::Fourier;
    report.basis = "fourier";
    report.role = estimate.role();
    report.period = nu;
    report.transform_length = nu;
    report.cycles = cycles;
    report.alpha = alpha;
    detail::test_coefficients(report, f.values, r, [nu](std::size_t i) { return fourier_label(i, nu); });
    report.reconstructed = from_fourier(FourierCoeffs{report.compressed_coefficients, nu});
    return report;
}

}  // namespace parma
