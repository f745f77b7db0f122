#pragma once

#include "clt_lab/law.hpp"

namespace clt {

/// eta * beta_s <= 2 * beta_{s+1} for eta the minimal atom gap.
///
/// holds and equality are decided on the law rescaled to unit variance
/// (tolerance 1e-12); lhs and rhs are reported in the law's own units.
/// predicted_equality: s == 1 and the law has at most two atoms, or s > 1
/// and the law is a point mass or a symmetric two-point law.
struct VonMisesReport {
    Rational eta;
    int s = 1;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
    bool equality = false;
    bool predicted_equality = false;
};

inline constexpr double kVonMisesTolerance = 1e-12;

/// Throws InvalidS for s outside {1, 2, 3}.
VonMisesReport vonmises_check(const Law& law, int s);

struct LogConvexityReport {
    bool skipped = false;          // point mass: every beta is 0
    bool convex = true;            // midpoint convexity on {1,2,3} and {2,3,4}
    bool constant_abs_dev = false; // |X - mu| constant almost surely
    bool strict = false;           // both midpoint gaps strictly positive
};

LogConvexityReport log_moment_convexity_report(const Law& law);

/// True iff log beta_t is midpoint convex on {1,2,3} and {2,3,4} within 1e-12,
/// strictly so whenever |X - mu| is not constant.
bool log_moment_convexity(const Law& law);

struct PairIdentityReport {
    double two_beta2 = 0.0;
    double mean_sq_diff = 0.0;  // E(X - Y)^2
    double mean_abs_diff = 0.0; // E|X - Y|
    double eta = 0.0;
    double beta1 = 0.0;
    bool identity_holds = false; // 2 beta_2 == E(X - Y)^2
    bool chain_holds = false;    // E(X-Y)^2 >= eta E|X-Y| >= eta beta_1
};

PairIdentityReport pair_identity_report(const Law& law);

bool pair_identity_check(const Law& law);

} // namespace clt
