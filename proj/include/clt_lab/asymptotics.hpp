#pragma once

#include "clt_lab/law.hpp"

#include <optional>
#include <vector>

namespace clt {

/// The three law functionals the limits depend on. h == 0 encodes a
/// non-lattice law.
struct ShapeParams {
    double h = 0.0;
    double sigma = 1.0;
    double alpha = 0.0;
};

/// h, sigma and alpha of a law with at least two atoms; throws DegenerateLaw
/// otherwise.
ShapeParams shape_params(const Law& law);

enum class LimitBranch { lattice_dominant, skew_dominant };

const char* to_string(LimitBranch branch);

/// lim sqrt(n) * (interval distance). value = (h_term + alpha_term + exp_term)
/// / sqrt(2 pi); y0 is reported only on the skew-dominated branch.
struct LimitReport {
    LimitBranch branch = LimitBranch::lattice_dominant;
    double value = 0.0;
    double h_term = 0.0;
    double alpha_term = 0.0;
    double exp_term = 0.0;
    std::optional<double> y0;
};

/// One-term Esseen expansion of F_n for a lattice law.
///
/// The sawtooth is anchored at the centered lattice: with a the smallest atom,
/// psi_n(x) = 1/2 - frac((x*sigma*sqrt(n) + n*mu - n*a) / h), so its jumps sit
/// exactly on the atoms of P_n. The integer part of n*a/h is removed in exact
/// arithmetic.
class EsseenExpansion {
public:
    /// Throws DegenerateLaw for single-atom laws.
    EsseenExpansion(const Law& law, long n);

    [[nodiscard]] double psi(double x) const;
    [[nodiscard]] double cdf(double x) const;
    /// cdf evaluated with an explicit sawtooth value; used at jump points.
    [[nodiscard]] double cdf_with_psi(double x, double psi_value) const;

    [[nodiscard]] const ShapeParams& shape() const noexcept { return shape_; }
    [[nodiscard]] long n() const noexcept { return n_; }

private:
    ShapeParams shape_;
    long n_;
    double mu_;
    double anchor_shift_; // frac(n*a/h) - n*mu/h
};

double psi_n(const Law& law, long n, double x);

double edgeworth_cdf(const Law& law, long n, double x);

/// sup |F_n - edgeworth_cdf| over both one-sided limits at every lattice point
/// of P_n (extended to cover [-12, 12]) and 8 interior points per gap.
double expansion_residual_sup(const Law& law, long n);

/// (h/(2 sigma) + |alpha|/(6 sigma^3)) / sqrt(2 pi).
double kolmogorov_limit(const ShapeParams& shape);
double kolmogorov_limit(const Law& law);

/// Branch lattice_dominant iff |alpha| <= h*sigma^2 (ties included, relative
/// tolerance 1e-12).
LimitReport interval_limit(const ShapeParams& shape);
LimitReport interval_limit(const Law& law);

/// f(y) = (h + alpha/3)/sqrt(2 pi) + h*phi(y) + (alpha/3)*phi''(y) after
/// rescaling to sigma = 1 and reflecting to alpha >= 0.
double profile_f(const ShapeParams& shape, double y);
double profile_f(const Law& law, double y);

/// Maximizers of profile_f: {0} on the lattice_dominant branch, otherwise
/// {-y0, +y0}.
std::vector<double> profile_argmax(const ShapeParams& shape);
std::vector<double> profile_argmax(const Law& law);

struct BerryEsseenConstants {
    double c_inf_be;           // (sqrt(10) + 3) / (6 sqrt(2 pi))
    double c_inf_be_intervals; // sqrt(2 / pi)
    double c_be_lower;
    double c_be_upper;
};

BerryEsseenConstants constants();

} // namespace clt
