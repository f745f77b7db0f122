#include "clt_lab/gamma_family.hpp"

#include "clt_lab/error.hpp"
#include "clt_lab/normal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace clt {

namespace {

// ln Gamma(a) - [(a - 1/2) ln a - a + ln(2 pi)/2], a >= 10.
double stirling_correction(double a)
{
    const double r = 1.0 / a;
    const double r2 = r * r;
    return r * (1.0 / 12.0 -
                r2 * (1.0 / 360.0 -
                      r2 * (1.0 / 1260.0 - r2 * (1.0 / 1680.0 - r2 * (1.0 / 1188.0 - r2 * 691.0 / 360360.0)))));
}

// t - log1p(t) without cancellation for small |t|.
double log1p_defect(double t)
{
    if (std::abs(t) >= 0.25) {
        return t - std::log1p(t);
    }
    double sum = 0.0;
    double power = t * t;
    for (int k = 2; k < 200; ++k) {
        const double term = power / k;
        sum += (k % 2 == 0) ? term : -term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) {
            break;
        }
        power *= t;
    }
    return sum;
}

// ln(x^a e^-x / Gamma(a)).
double log_prefactor(double a, double x)
{
    if (a >= 10.0) {
        const double t = (x - a) / a;
        return 0.5 * std::log(a / (2.0 * std::numbers::pi)) - stirling_correction(a) -
               a * log1p_defect(t);
    }
    return a * std::log(x) - x - std::lgamma(a);
}

double lower_series(double a, double x)
{
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 100000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (term <= sum * 1e-17) {
            break;
        }
    }
    return std::exp(log_prefactor(a, x)) * sum;
}

// Modified Lentz evaluation of the continued fraction for Q(a, x).
double upper_fraction(double a, double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) <= 1e-16) {
            break;
        }
    }
    return std::exp(log_prefactor(a, x)) * h;
}

void check_n(long n)
{
    if (n < 1) {
        throw std::invalid_argument("number of summands must be >= 1");
    }
    if (n > kGammaMaxN) {
        throw Error(ErrorKind::ScaleExceeded,
                    "gamma family supports n <= " + std::to_string(kGammaMaxN));
    }
}

double deviation(long n, double x)
{
    return gamma_standardized_cdf(n, x) - std_normal_cdf(x);
}

// Ternary search for the extremum of D on [lo, hi]; sign = +1 for a maximum.
double refine(long n, double lo, double hi, double sign)
{
    while (hi - lo > 1e-10) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (sign * deviation(n, m1) < sign * deviation(n, m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double regularized_gamma_p(double a, double x)
{
    if (!(a > 0.0) || !std::isfinite(a) || std::isnan(x)) {
        throw std::invalid_argument("regularized_gamma_p needs a > 0 and a numeric x");
    }
    if (x <= 0.0) {
        return 0.0;
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return lower_series(a, x);
    }
    return 1.0 - upper_fraction(a, x);
}

double gamma_standardized_cdf(long n, double x)
{
    check_n(n);
    if (!std::isfinite(x)) {
        throw Error(ErrorKind::NonFiniteInput, "gamma_standardized_cdf: non-finite argument");
    }
    const double nd = static_cast<double>(n);
    const double y = nd + std::sqrt(nd) * x;
    if (y <= 0.0) {
        return 0.0;
    }
    return regularized_gamma_p(nd, y);
}

DeviationExtrema smooth_deviation_extrema(long n)
{
    check_n(n);
    constexpr double kLo = -12.0;
    constexpr double kStep = 1e-2;
    constexpr std::size_t kPoints = 2401;

    std::vector<double> xs(kPoints);
    std::vector<double> ds(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
        xs[i] = kLo + kStep * static_cast<double>(i);
        ds[i] = deviation(n, xs[i]);
    }

    DeviationExtrema result;
    result.arg_sup.x = std::numeric_limits<double>::infinity();
    result.arg_inf.x = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < kPoints; ++i) {
        const double left = ds[i] - ds[i - 1];
        const double right = ds[i + 1] - ds[i];
        if (left > 0.0 && right <= 0.0) {
            double x = refine(n, xs[i - 1], xs[i + 1], 1.0);
            double d = deviation(n, x);
            if (ds[i] > d) {
                x = xs[i];
                d = ds[i];
            }
            if (d > result.sup_dev) {
                result.sup_dev = d;
                result.arg_sup = ExtremumLocation{i, Side::at, x};
            }
        } else if (left < 0.0 && right >= 0.0) {
            double x = refine(n, xs[i - 1], xs[i + 1], -1.0);
            double d = deviation(n, x);
            if (ds[i] < d) {
                x = xs[i];
                d = ds[i];
            }
            if (d < result.inf_dev) {
                result.inf_dev = d;
                result.arg_inf = ExtremumLocation{i, Side::at, x};
            }
        }
    }
    return result;
}

double smooth_interval_distance(long n)
{
    return interval_distance(smooth_deviation_extrema(n));
}

double smooth_kolmogorov_distance(long n)
{
    return kolmogorov_distance(smooth_deviation_extrema(n));
}

} // namespace clt
