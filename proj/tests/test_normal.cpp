#include "clt_lab/error.hpp"
#include "clt_lab/normal.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

using namespace clt;

TEST_CASE("std_normal_cdf against 40-digit reference values")
{
    // mpmath ncdf at 40 digits.
    const std::vector<std::pair<double, double>> reference = {
        {-30.0, 4.906713927148187059533809e-198},
        {-8.0, 6.220960574271784123515995e-16},
        {-3.0, 0.001349898031630094526651815},
        {-1.0, 0.1586552539314570514147675},
        {0.5, 0.6914624612740131036377046},
        {1.0, 0.8413447460685429485852325},
        {2.5, 0.9937903346742238648330219},
        {6.0, 0.9999999990134123549623019},
    };
    for (const auto& [x, expected] : reference) {
        CAPTURE(x);
        CHECK(std::abs(std_normal_cdf(x) - expected) <= 1e-15);
    }
    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(std::abs(std_normal_cdf(1.0) - 0.841344746068543) <= 1e-12);
    CHECK(std::abs(std_normal_cdf(40.0) - 1.0) <= 1e-15);
    CHECK(std::abs(std_normal_cdf(40.0) - std_normal_cdf(-40.0) - 1.0) <= 1e-15);
}

TEST_CASE("std_normal_cdf is symmetric and increasing")
{
    double previous = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = -6.0 + 0.12 * i;
        const double value = std_normal_cdf(x);
        CHECK(value > previous);
        previous = value;
        CHECK(std_normal_cdf(-x) == doctest::Approx(1.0 - value).epsilon(1e-15).scale(1.0));
    }
    // For x < 0 the tail itself is evaluated, so the reflection is exact.
    for (double x : {0.3, 1.7, 4.2, 9.0}) {
        const double tail = std_normal_cdf(-x);
        CHECK(std_normal_cdf(x) == 1.0 - tail);
    }
}

TEST_CASE("std_normal_pdf values")
{
    CHECK(std_normal_pdf(0.0) == doctest::Approx(0.398942280401433).epsilon(1e-15));
    CHECK(std::abs(std_normal_pdf(3.0) - 0.004431848411938007) <= 1e-17);
    for (double x : {0.1, 0.9, 2.2, 5.5}) {
        CHECK(std_normal_pdf(x) == std_normal_pdf(-x));
        const double direct = std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI);
        CHECK(std_normal_pdf(x) == doctest::Approx(direct).epsilon(1e-15));
    }
}

TEST_CASE("std_normal_pdf_dd values")
{
    CHECK(std_normal_pdf_dd(0.0) == doctest::Approx(-0.398942280401433).epsilon(1e-15));
    CHECK(std_normal_pdf_dd(1.0) == 0.0);
    CHECK(std_normal_pdf_dd(-1.0) == 0.0);
    // 3 * phi(2), mpmath.
    CHECK(std::abs(std_normal_pdf_dd(2.0) - 0.1619728995395641558516926) <= 1e-15);
}

TEST_CASE("finite-difference consistency of cdf, pdf and pdf''")
{
    const double eps = 1e-5;
    for (int i = 0; i < 100; ++i) {
        const double x = -6.0 + 12.0 * i / 99.0;
        const double d_cdf = (std_normal_cdf(x + eps) - std_normal_cdf(x - eps)) / (2 * eps);
        CHECK(std::abs(d_cdf - std_normal_pdf(x)) <= 1e-6);
        // phi'' = d/dx phi' with phi'(x) = -x phi(x).
        const auto dphi = [](double y) { return -y * std_normal_pdf(y); };
        const double d2 = (dphi(x + eps) - dphi(x - eps)) / (2 * eps);
        CHECK(std::abs(d2 - std_normal_pdf_dd(x)) <= 1e-6);
    }
}

TEST_CASE("non-finite input is rejected")
{
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(std_normal_cdf(nan), Error);
    CHECK_THROWS_AS(std_normal_cdf(inf), Error);
    CHECK_THROWS_AS(std_normal_pdf(-inf), Error);
    CHECK_THROWS_AS(std_normal_pdf_dd(nan), Error);
    try {
        std_normal_cdf(nan);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonFiniteInput);
    }
}
