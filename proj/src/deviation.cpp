#include "clt_lab/deviation.hpp"

#include "clt_lab/error.hpp"
#include "clt_lab/normal.hpp"
#include "clt_lab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace clt {

DeviationExtrema deviation_extrema(const StandardizedLatticePMF& pmf)
{
    const auto masses = pmf.values();
    DeviationExtrema result;
    result.arg_sup.x = std::numeric_limits<double>::infinity();
    result.arg_inf.x = -std::numeric_limits<double>::infinity();

    CompensatedSum cdf;
    for (std::size_t k = 0; k < masses.size(); ++k) {
        const double x = pmf.position(k);
        const double phi = std_normal_cdf(x);
        const double left = cdf.value();
        cdf.add(masses[k]);
        const double right = k + 1 == masses.size() ? 1.0 : cdf.value();

        if (const double d = left - phi; d < result.inf_dev) {
            result.inf_dev = d;
            result.arg_inf = ExtremumLocation{k, Side::left_limit, x};
        }
        if (const double d = right - phi; d > result.sup_dev) {
            result.sup_dev = d;
            result.arg_sup = ExtremumLocation{k, Side::at, x};
        }
    }
    return result;
}

double kolmogorov_distance(const DeviationExtrema& extrema)
{
    return std::max(extrema.sup_dev, -extrema.inf_dev);
}

double interval_distance(const DeviationExtrema& extrema)
{
    return extrema.sup_dev - extrema.inf_dev;
}

double kolmogorov_distance(const StandardizedLatticePMF& pmf)
{
    return kolmogorov_distance(deviation_extrema(pmf));
}

double interval_distance(const StandardizedLatticePMF& pmf)
{
    return interval_distance(deviation_extrema(pmf));
}

double interval_distance_bruteforce(const StandardizedLatticePMF& pmf)
{
    const auto masses = pmf.values();
    const std::size_t k = masses.size();
    if (k > kBruteforceMaxAtoms) {
        throw Error(ErrorKind::OracleScaleExceeded,
                    "brute-force interval oracle supports at most " +
                        std::to_string(kBruteforceMaxAtoms) + " atoms");
    }

    // prefix[j] = P_n of the atoms with index < j.
    std::vector<long double> prefix(k + 1, 0.0L);
    std::vector<long double> phi(k);
    for (std::size_t j = 0; j < k; ++j) {
        prefix[j + 1] = prefix[j] + masses[j];
        phi[j] = std_normal_cdf(pmf.position(j));
    }

    long double best = 0.0L;
    const auto consider = [&best](long double mass, long double normal) {
        best = std::max(best, std::abs(mass - normal));
    };

    for (std::size_t r = 0; r < k; ++r) {
        // Half-lines ]-inf, x_r] and ]-inf, x_r[.
        consider(prefix[r + 1], phi[r]);
        consider(prefix[r], phi[r]);
        // Half-lines [x_r, inf[ and ]x_r, inf[.
        consider(prefix[k] - prefix[r], 1.0L - phi[r]);
        consider(prefix[k] - prefix[r + 1], 1.0L - phi[r]);
        for (std::size_t l = 0; l <= r; ++l) {
            const long double normal = phi[r] - phi[l];
            consider(prefix[r + 1] - prefix[l], normal);     // [x_l, x_r]
            consider(prefix[r + 1] - prefix[l + 1], normal); // ]x_l, x_r]
            if (l < r) {
                consider(prefix[r] - prefix[l], normal);     // [x_l, x_r[
                consider(prefix[r] - prefix[l + 1], normal); // ]x_l, x_r[
            }
        }
    }
    return static_cast<double>(best);
}

} // namespace clt
