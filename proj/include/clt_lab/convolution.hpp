#pragma once

#include "clt_lab/law.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace clt {

/// Law of X1 + ... + Xn on the lattice base + step*k, k = 0..K.
struct SumPMF {
    long n = 1;
    Rational base;
    Rational step;
    std::shared_ptr<const std::vector<double>> masses;

    [[nodiscard]] std::span<const double> values() const { return *masses; }
    [[nodiscard]] std::size_t size() const { return masses->size(); }
};

/// Law of the standardized sum (S_n - n*mu) / (sigma*sqrt(n)); atom k sits at
/// offset + k*step_std.
struct StandardizedLatticePMF {
    long n = 1;
    double offset = 0.0;
    double step_std = 1.0;
    std::shared_ptr<const std::vector<double>> masses;
    double mu = 0.0;
    double sigma = 1.0;

    [[nodiscard]] std::span<const double> values() const { return *masses; }
    [[nodiscard]] std::size_t size() const { return masses->size(); }
    [[nodiscard]] double position(std::size_t k) const
    {
        return offset + static_cast<double>(k) * step_std;
    }
};

/// Builds a standardized pmf directly from lattice data; used for synthetic
/// inputs to the distance routines.
StandardizedLatticePMF make_standardized_pmf(double offset, double step_std,
                                             std::vector<double> masses);

struct ConvolutionOptions {
    std::size_t support_cap = std::size_t{1} << 20;
    unsigned threads = 0;
};

/// n-fold self-convolution by square-and-multiply on the integer lattice of
/// the law. Throws SupportOverflow when the support exceeds the cap.
/// Exactly-zero (underflowed) end entries are trimmed.
SumPMF self_convolve(const Law& law, long n, const ConvolutionOptions& options = {});

/// Throws DegenerateLaw when sigma == 0.
StandardizedLatticePMF standardize(const SumPMF& sum, const MomentSet& base_moments);

/// self_convolve followed by standardize.
StandardizedLatticePMF standardized_sum(const Law& law, long n,
                                        const ConvolutionOptions& options = {});

/// Direct O(|a|*|b|) convolution with per-cell compensated accumulation.
std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             unsigned threads = 0);

struct ExactSumPMF {
    long n = 1;
    Rational base;
    Rational step;
    std::vector<Rational> masses;
};

inline constexpr long kExactOracleMaxN = 64;

/// Exact big-rational n-fold convolution (test oracle). Throws
/// OracleScaleExceeded for n > 64.
ExactSumPMF exact_convolve_oracle(const ExactLaw& law, long n);

} // namespace clt
