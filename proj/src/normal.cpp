#include "clt_lab/normal.hpp"

#include "clt_lab/error.hpp"

#include <cmath>
#include <numbers>

namespace clt {

namespace {

void require_finite(double x, const char* what)
{
    if (!std::isfinite(x)) {
        throw Error(ErrorKind::NonFiniteInput, std::string(what) + ": non-finite argument");
    }
}

} // namespace

double std_normal_cdf(double x)
{
    require_finite(x, "std_normal_cdf");
    const double tail = 0.5 * std::erfc(std::abs(x) * (1.0 / std::numbers::sqrt2));
    return x < 0.0 ? tail : 1.0 - tail;
}

double std_normal_pdf(double x)
{
    require_finite(x, "std_normal_pdf");
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_pdf_dd(double x)
{
    require_finite(x, "std_normal_pdf_dd");
    return (x * x - 1.0) * std_normal_pdf(x);
}

} // namespace clt
