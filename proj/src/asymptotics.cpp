#include "clt_lab/asymptotics.hpp"

#include "clt_lab/convolution.hpp"
#include "clt_lab/error.hpp"
#include "clt_lab/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace clt {

namespace {

void require_nondegenerate(const ShapeParams& shape)
{
    if (!(shape.sigma > 0.0)) {
        throw Error(ErrorKind::DegenerateLaw, "law has zero variance");
    }
}

constexpr double kBranchTieTolerance = 1e-12;

// Shape with sigma = 1 and alpha >= 0.
ShapeParams normalized(const ShapeParams& shape)
{
    require_nondegenerate(shape);
    const double s = shape.sigma;
    return ShapeParams{shape.h / s, 1.0, std::abs(shape.alpha) / (s * s * s)};
}

double floor_frac(double t)
{
    return t - std::floor(t);
}

} // namespace

const char* to_string(LimitBranch branch)
{
    return branch == LimitBranch::lattice_dominant ? "lattice_dominant" : "skew_dominant";
}

ShapeParams shape_params(const Law& law)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::DegenerateLaw, "law needs at least two atoms");
    }
    const MomentSet m = moments(law);
    return ShapeParams{lattice_span(law).to_double(), m.sigma, m.alpha};
}

EsseenExpansion::EsseenExpansion(const Law& law, long n) : shape_(shape_params(law)), n_(n)
{
    if (n < 1) {
        throw std::invalid_argument("number of summands must be >= 1");
    }
    const Rational h = lattice_span(law);
    mu_ = moments(law).mu;
    const Rational lattice_anchor = law.min_position() * Rational(n) / h;
    anchor_shift_ = lattice_anchor.frac().to_double() - static_cast<double>(n) * mu_ / shape_.h;
}

double EsseenExpansion::psi(double x) const
{
    const double t = x * shape_.sigma * std::sqrt(static_cast<double>(n_)) / shape_.h - anchor_shift_;
    return 0.5 - floor_frac(t);
}

double EsseenExpansion::cdf_with_psi(double x, double psi_value) const
{
    const double root_n = std::sqrt(static_cast<double>(n_));
    const double s = shape_.sigma;
    return std_normal_cdf(x) + shape_.h / (s * root_n) * psi_value * std_normal_pdf(x) -
           shape_.alpha / (6.0 * s * s * s * root_n) * std_normal_pdf_dd(x);
}

double EsseenExpansion::cdf(double x) const
{
    return cdf_with_psi(x, psi(x));
}

double psi_n(const Law& law, long n, double x)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::UnboundedSpan, "psi_n needs a lattice law with at least two atoms");
    }
    return EsseenExpansion(law, n).psi(x);
}

double edgeworth_cdf(const Law& law, long n, double x)
{
    return EsseenExpansion(law, n).cdf(x);
}

double expansion_residual_sup(const Law& law, long n)
{
    const EsseenExpansion expansion(law, n);
    const StandardizedLatticePMF pmf = standardized_sum(law, n);
    const auto masses = pmf.values();
    const auto size = static_cast<long>(masses.size());

    constexpr double kWindow = 12.0;
    constexpr int kInterior = 8;
    const long k_lo = std::min(0L, static_cast<long>(std::floor((-kWindow - pmf.offset) / pmf.step_std)));
    const long k_hi = std::max(size - 1, static_cast<long>(std::ceil((kWindow - pmf.offset) / pmf.step_std)));

    double residual = 0.0;
    double cdf = 0.0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double x = pmf.offset + static_cast<double>(k) * pmf.step_std;
        const double left = cdf;
        if (k >= 0 && k < size) {
            cdf = k + 1 == size ? 1.0 : cdf + masses[static_cast<std::size_t>(k)];
        }
        // psi jumps from -1/2 to +1/2 at every lattice point of P_n.
        residual = std::max(residual, std::abs(left - expansion.cdf_with_psi(x, -0.5)));
        residual = std::max(residual, std::abs(cdf - expansion.cdf_with_psi(x, 0.5)));
        for (int j = 1; j <= kInterior; ++j) {
            const double y = x + pmf.step_std * j / (kInterior + 1);
            residual = std::max(residual, std::abs(cdf - expansion.cdf(y)));
        }
    }
    return residual;
}

double kolmogorov_limit(const ShapeParams& shape)
{
    const ShapeParams u = normalized(shape);
    return (u.h / 2.0 + u.alpha / 6.0) * kInvSqrt2Pi;
}

double kolmogorov_limit(const Law& law)
{
    return kolmogorov_limit(shape_params(law));
}

LimitReport interval_limit(const ShapeParams& shape)
{
    const ShapeParams u = normalized(shape);
    LimitReport report;
    const double scaled_h = shape.h * shape.sigma * shape.sigma;
    if (std::abs(shape.alpha) <= scaled_h * (1.0 + kBranchTieTolerance)) {
        report.branch = LimitBranch::lattice_dominant;
        report.h_term = u.h;
    } else {
        const double ratio = scaled_h / std::abs(shape.alpha);
        report.branch = LimitBranch::skew_dominant;
        report.h_term = u.h / 2.0;
        report.alpha_term = u.alpha / 6.0;
        report.exp_term = u.alpha / 3.0 * std::exp(-1.5 * (1.0 - ratio));
        report.y0 = std::sqrt(3.0 - 3.0 * ratio);
    }
    report.value = (report.h_term + report.alpha_term + report.exp_term) * kInvSqrt2Pi;
    return report;
}

LimitReport interval_limit(const Law& law)
{
    return interval_limit(shape_params(law));
}

double profile_f(const ShapeParams& shape, double y)
{
    const ShapeParams u = normalized(shape);
    return (u.h + u.alpha / 3.0) * kInvSqrt2Pi + u.h * std_normal_pdf(y) +
           u.alpha / 3.0 * std_normal_pdf_dd(y);
}

double profile_f(const Law& law, double y)
{
    return profile_f(shape_params(law), y);
}

std::vector<double> profile_argmax(const ShapeParams& shape)
{
    require_nondegenerate(shape);
    const double scaled_h = shape.h * shape.sigma * shape.sigma;
    if (std::abs(shape.alpha) <= scaled_h * (1.0 + kBranchTieTolerance)) {
        return {0.0};
    }
    const double y0 = std::sqrt(3.0 - 3.0 * scaled_h / std::abs(shape.alpha));
    return {-y0, y0};
}

std::vector<double> profile_argmax(const Law& law)
{
    return profile_argmax(shape_params(law));
}

BerryEsseenConstants constants()
{
    return BerryEsseenConstants{
        .c_inf_be = (std::sqrt(10.0) + 3.0) / 6.0 * kInvSqrt2Pi,
        .c_inf_be_intervals = std::sqrt(2.0 / std::numbers::pi),
        .c_be_lower = 0.4097,
        .c_be_upper = 0.4748,
    };
}

} // namespace clt
