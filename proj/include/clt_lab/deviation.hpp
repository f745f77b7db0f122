#pragma once

#include "clt_lab/convolution.hpp"

#include <cstddef>
#include <limits>

namespace clt {

enum class Side { at, left_limit };

/// Where an extremum of D = F_n - Phi is attained. index == kAtInfinity marks
/// the limit value 0 at +-infinity.
struct ExtremumLocation {
    static constexpr std::size_t kAtInfinity = std::numeric_limits<std::size_t>::max();

    std::size_t index = kAtInfinity;
    Side side = Side::at;
    double x = 0.0;
};

struct DeviationExtrema {
    double sup_dev = 0.0; // >= 0
    double inf_dev = 0.0; // <= 0
    ExtremumLocation arg_sup;
    ExtremumLocation arg_inf;
};

/// sup and inf of D(x) = F_n(x) - Phi(x). Between atoms F_n is constant and
/// Phi increasing, so the sup is attained at an atom and the inf at a left
/// limit; one pass with a compensated running cdf pinned to 1 at the end.
DeviationExtrema deviation_extrema(const StandardizedLatticePMF& pmf);

double kolmogorov_distance(const DeviationExtrema& extrema);
double interval_distance(const DeviationExtrema& extrema);

/// sup_x |F_n(x) - Phi(x)|.
double kolmogorov_distance(const StandardizedLatticePMF& pmf);

/// sup over intervals I of |P_n(I) - N(0,1)(I)| = sup D - inf D.
double interval_distance(const StandardizedLatticePMF& pmf);

inline constexpr std::size_t kBruteforceMaxAtoms = 4096;

/// Test oracle: maximizes |P_n(I) - N(I)| over every interval whose endpoints
/// are atoms (open or closed at either end) and over all half-lines.
/// O(k^2); throws OracleScaleExceeded above 4096 atoms.
double interval_distance_bruteforce(const StandardizedLatticePMF& pmf);

} // namespace clt
