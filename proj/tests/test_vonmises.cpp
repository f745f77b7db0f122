#include "clt_lab/asymptotics.hpp"
#include "clt_lab/error.hpp"
#include "clt_lab/normal.hpp"
#include "clt_lab/vonmises.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace clt;
using clt::testing::bernoulli;
using clt::testing::rademacher;

namespace {

Rational q(const char* text)
{
    return Rational::parse(text);
}

bool symmetric_two_point(const Law& law)
{
    return law.size() == 2 && std::abs(law[0].p - law[1].p) <= 1e-12;
}

} // namespace

TEST_CASE("von Mises examples")
{
    const VonMisesReport rad = vonmises_check(rademacher(), 2);
    CHECK(rad.eta == q("2"));
    CHECK(rad.lhs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rad.rhs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rad.holds);
    CHECK(rad.equality);
    CHECK(rad.predicted_equality);

    const VonMisesReport b = vonmises_check(bernoulli(0.3), 1);
    CHECK(b.eta == q("1"));
    CHECK(b.lhs == doctest::Approx(0.42).epsilon(1e-14));
    CHECK(b.rhs == doctest::Approx(0.42).epsilon(1e-14));
    CHECK(b.equality);
    CHECK(b.predicted_equality);

    const Law uniform3 = make_law({{q("0"), 1.0 / 3}, {q("1"), 1.0 / 3}, {q("2"), 1.0 / 3}});
    const VonMisesReport u = vonmises_check(uniform3, 2);
    CHECK(u.holds);
    CHECK_FALSE(u.equality);
    CHECK_FALSE(u.predicted_equality);
    CHECK(u.lhs == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(u.rhs == doctest::Approx(4.0 / 3).epsilon(1e-14));

    const VonMisesReport point = vonmises_check(make_law({{q("5"), 1.0}}), 3);
    CHECK(point.lhs == 0.0);
    CHECK(point.rhs == 0.0);
    CHECK(point.holds);
    CHECK(point.equality);
    CHECK(point.predicted_equality);
}

TEST_CASE("invalid s")
{
    for (int s : {0, 4, -1}) {
        try {
            vonmises_check(rademacher(), s);
            FAIL("expected InvalidS");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidS);
        }
    }
}

TEST_CASE("random laws: inequality holds and equality matches the classification")
{
    std::mt19937_64 rng(1001);
    clt::testing::LawShape shape;
    shape.min_atoms = 1;
    int equalities = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Law law = clt::testing::random_law(rng, shape);
        for (int s = 1; s <= 3; ++s) {
            const VonMisesReport report = vonmises_check(law, s);
            CAPTURE(trial);
            CAPTURE(s);
            CHECK(report.holds);
            CHECK(report.equality == report.predicted_equality);
            equalities += report.equality ? 1 : 0;
        }
    }
    CHECK(equalities > 0);
}

TEST_CASE("two-point laws")
{
    for (const char* w : {"1/2", "1/3", "9/19", "3/4"}) {
        const Rational p = q(w);
        const ExactLaw exact = ExactLaw::make({{q("-3/2"), p}, {q("7/4"), Rational(1) - p}});
        const Law law = exact.to_law();
        const bool symmetric = p == q("1/2");
        CHECK(vonmises_check(law, 1).equality);
        for (int s : {2, 3}) {
            const VonMisesReport report = vonmises_check(law, s);
            CHECK(report.holds);
            CHECK(report.equality == symmetric);
            CHECK(report.predicted_equality == symmetric);
        }
    }
}

TEST_CASE("log-moment convexity")
{
    const LogConvexityReport rad = log_moment_convexity_report(rademacher());
    CHECK_FALSE(rad.skipped);
    CHECK(rad.convex);
    CHECK(rad.constant_abs_dev);
    CHECK_FALSE(rad.strict);
    CHECK(log_moment_convexity(rademacher()));

    const LogConvexityReport b = log_moment_convexity_report(bernoulli(0.3));
    CHECK(b.convex);
    CHECK(b.strict);
    CHECK(log_moment_convexity(bernoulli(0.3)));

    const LogConvexityReport point = log_moment_convexity_report(make_law({{q("0"), 1.0}}));
    CHECK(point.skipped);
    CHECK(log_moment_convexity(make_law({{q("0"), 1.0}})));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 500; ++trial) {
        CHECK(log_moment_convexity(clt::testing::random_law(rng)));
    }
}

TEST_CASE("pair identity")
{
    const PairIdentityReport rad = pair_identity_report(rademacher());
    CHECK(rad.mean_sq_diff == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rad.two_beta2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(rad.mean_abs_diff == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rad.eta == 2.0);
    CHECK(rad.beta1 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rad.identity_holds);
    CHECK(rad.chain_holds);

    const PairIdentityReport b = pair_identity_report(bernoulli(0.3));
    CHECK(b.mean_sq_diff == doctest::Approx(0.42).epsilon(1e-14));
    CHECK(b.two_beta2 == doctest::Approx(0.42).epsilon(1e-14));
    CHECK(b.identity_holds);

    const Law three = make_law({{q("0"), 1.0 / 3}, {q("1"), 1.0 / 3}, {q("3"), 1.0 / 3}});
    const PairIdentityReport t = pair_identity_report(three);
    CHECK(t.identity_holds);
    CHECK(t.chain_holds);
    CHECK(t.mean_sq_diff > t.eta * t.mean_abs_diff + 1e-6);
    CHECK(t.eta * t.mean_abs_diff > t.eta * t.beta1 + 1e-6);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        CHECK(pair_identity_check(clt::testing::random_law(rng)));
    }
}

TEST_CASE("corollary chains")
{
    std::mt19937_64 rng(4242);
    int lattice_branch = 0;
    int skew_branch = 0;
    int equality_cases = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        clt::testing::LawShape shape;
        shape.max_atoms = trial % 4 == 0 ? 2 : 8;
        if (trial % 8 == 0) {
            shape.max_weight = 1; // equal masses
        }
        const Law law = clt::testing::random_law(rng, shape);
        const MomentSet m = moments(law);
        const ShapeParams sp = shape_params(law);
        const double s3 = m.sigma * m.sigma * m.sigma;
        CAPTURE(trial);
        if (interval_limit(law).branch == LimitBranch::lattice_dominant) {
            CHECK(std::abs(m.alpha) <= sp.h * m.sigma2 * (1 + 1e-12));
            ++lattice_branch;
            const double lhs = sp.h / m.sigma;
            const double rhs = 2 * m.beta[3] / s3;
            CHECK(lhs <= rhs + 1e-12);
            const bool equal = std::abs(lhs - rhs) <= 1e-12;
            CHECK(equal == symmetric_two_point(law));
            equality_cases += equal ? 1 : 0;
        } else {
            ++skew_branch;
            const double scaled = kSqrt2Pi * interval_limit(law).value;
            CHECK(scaled < std::abs(m.alpha) / s3);
            CHECK(std::abs(m.alpha) / s3 <= m.beta[3] / s3 + 1e-12);
        }
    }
    CHECK(lattice_branch > 100);
    CHECK(skew_branch > 100);
    CHECK(equality_cases > 0);
}
