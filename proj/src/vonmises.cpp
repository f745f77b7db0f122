#include "clt_lab/vonmises.hpp"

#include "clt_lab/error.hpp"
#include "clt_lab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clt {

VonMisesReport vonmises_check(const Law& law, int s)
{
    if (s < 1 || s > 3) {
        throw Error(ErrorKind::InvalidS, "von Mises check supports s in {1, 2, 3}, got " +
                                             std::to_string(s));
    }
    VonMisesReport report;
    report.s = s;
    if (law.size() == 1) {
        report.equality = true;
        report.predicted_equality = true;
        return report;
    }

    report.eta = min_gap(law);
    const MomentSet m = moments(law);
    const double eta = report.eta.to_double();
    report.lhs = eta * m.beta[s];
    report.rhs = 2.0 * m.beta[s + 1];

    // Unit-variance comparison.
    const double lhs = (eta / m.sigma) * (m.beta[s] / std::pow(m.sigma, s));
    const double rhs = 2.0 * m.beta[s + 1] / std::pow(m.sigma, s + 1);
    report.holds = lhs <= rhs + kVonMisesTolerance * rhs;
    report.equality = std::abs(lhs - rhs) <= kVonMisesTolerance * rhs;

    if (s == 1) {
        report.predicted_equality = law.size() <= 2;
    } else {
        report.predicted_equality =
            law.size() == 2 && std::abs(law[0].p - law[1].p) <= kVonMisesTolerance;
    }
    return report;
}

LogConvexityReport log_moment_convexity_report(const Law& law)
{
    LogConvexityReport report;
    if (law.size() == 1) {
        report.skipped = true;
        report.constant_abs_dev = true;
        return report;
    }
    const MomentSet m = moments(law);
    std::array<double, 5> log_beta{};
    for (int t = 1; t <= 4; ++t) {
        log_beta[t] = std::log(m.beta[t]);
    }
    const double gap_123 = 0.5 * (log_beta[1] + log_beta[3]) - log_beta[2];
    const double gap_234 = 0.5 * (log_beta[2] + log_beta[4]) - log_beta[3];

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& atom : law.atoms()) {
        const double d = std::abs(atom.x.to_double() - m.mu);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }

    constexpr double tol = 1e-12;
    report.convex = gap_123 >= -tol && gap_234 >= -tol;
    report.constant_abs_dev = hi - lo <= tol * hi;
    report.strict = gap_123 > 0.0 && gap_234 > 0.0;
    return report;
}

bool log_moment_convexity(const Law& law)
{
    const LogConvexityReport r = log_moment_convexity_report(law);
    return r.skipped || (r.convex && (r.constant_abs_dev || r.strict));
}

PairIdentityReport pair_identity_report(const Law& law)
{
    PairIdentityReport report;
    const MomentSet m = moments(law);
    report.two_beta2 = 2.0 * m.beta[2];
    report.beta1 = m.beta[1];
    if (law.size() == 1) {
        report.identity_holds = true;
        report.chain_holds = true;
        return report;
    }
    report.eta = min_gap(law).to_double();

    std::vector<double> xs;
    xs.reserve(law.size());
    for (const auto& atom : law.atoms()) {
        xs.push_back(atom.x.to_double() - m.mu);
    }
    CompensatedSum sq;
    CompensatedSum ab;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const double w = law[i].p * law[j].p;
            const double d = xs[i] - xs[j];
            sq.add(w * d * d);
            ab.add(w * std::abs(d));
        }
    }
    report.mean_sq_diff = sq.value();
    report.mean_abs_diff = ab.value();

    const double tol = 1e-12 * m.sigma2;
    report.identity_holds = std::abs(report.two_beta2 - report.mean_sq_diff) <= tol;
    report.chain_holds = report.mean_sq_diff >= report.eta * report.mean_abs_diff - tol &&
                         report.mean_abs_diff * report.eta >= report.eta * report.beta1 - tol;
    return report;
}

bool pair_identity_check(const Law& law)
{
    const PairIdentityReport r = pair_identity_report(law);
    return r.identity_holds && r.chain_holds;
}

} // namespace clt
