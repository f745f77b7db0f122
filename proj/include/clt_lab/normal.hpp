#pragma once

namespace clt {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;
inline constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;

/// Standard normal distribution function. Absolute error below 1e-15; the
/// lower tail is always evaluated directly so that cdf(-x) == 1 - cdf(x).
/// Throws NonFiniteInput for NaN or infinite arguments.
double std_normal_cdf(double x);

/// Standard normal density.
double std_normal_pdf(double x);

/// Second derivative of the standard normal density, (x^2 - 1) * pdf(x).
double std_normal_pdf_dd(double x);

} // namespace clt
