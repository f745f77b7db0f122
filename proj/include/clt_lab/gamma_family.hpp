#pragma once

#include "clt_lab/deviation.hpp"

namespace clt {

inline constexpr long kGammaMaxN = 4096;

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series below a + 1, Lentz continued fraction for Q above.
double regularized_gamma_p(double a, double x);

/// F_n(x) for the standardized sum of n unit exponentials:
/// P(n, n + sqrt(n) x), and 0 where n + sqrt(n) x <= 0.
/// Throws ScaleExceeded for n > 4096.
double gamma_standardized_cdf(long n, double x);

/// Extrema of F_n - Phi from a scan of [-12, 12] at step 1e-2, each local
/// extremum refined by ternary search to 1e-10. Locations report the grid
/// index of the bracket and the refined x.
DeviationExtrema smooth_deviation_extrema(long n);

double smooth_interval_distance(long n);
double smooth_kolmogorov_distance(long n);

} // namespace clt
