#include "clt_lab/convolution.hpp"

#include "clt_lab/error.hpp"
#include "clt_lab/numeric.hpp"
#include "clt_lab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace clt {

namespace {

using Integer = Rational::Integer;

void require_positive_n(long n)
{
    if (n < 1) {
        throw std::invalid_argument("number of summands must be >= 1, got " + std::to_string(n));
    }
}

// Lattice index of every atom relative to the smallest one.
template <typename AtomRange>
std::vector<std::size_t> lattice_indices(const AtomRange& atoms, const Rational& step)
{
    std::vector<std::size_t> indices;
    indices.reserve(atoms.size());
    for (const auto& atom : atoms) {
        const Rational k = (atom.x - atoms.front().x) / step;
        indices.push_back(k.num().template convert_to<std::size_t>());
    }
    return indices;
}

void check_support(std::size_t width, long n, std::size_t cap)
{
    const Integer support = Integer(width) * n + 1;
    if (support > cap) {
        throw Error(ErrorKind::SupportOverflow,
                    "support of the " + std::to_string(n) + "-fold sum has " + support.str() +
                        " lattice points, cap is " + std::to_string(cap));
    }
}

} // namespace

std::vector<double> convolve(std::span<const double> a, std::span<const double> b,
                             unsigned threads)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    if (a.size() > b.size()) {
        std::swap(a, b);
    }
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    parallel_for(
        out.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const std::size_t j_lo = i >= b.size() ? i - (b.size() - 1) : 0;
                const std::size_t j_hi = std::min(i, a.size() - 1);
                CompensatedSum acc;
                for (std::size_t j = j_lo; j <= j_hi; ++j) {
                    acc.add(a[j] * b[i - j]);
                }
                out[i] = acc.value();
            }
        },
        threads, 1024);
    return out;
}

SumPMF self_convolve(const Law& law, long n, const ConvolutionOptions& options)
{
    require_positive_n(n);
    SumPMF sum;
    sum.n = n;
    if (law.size() == 1) {
        sum.base = law.min_position() * Rational(n);
        sum.step = Rational(1);
        sum.masses = std::make_shared<const std::vector<double>>(1, 1.0);
        return sum;
    }

    const Rational step = lattice_span(law);
    const auto indices = lattice_indices(law.atoms(), step);
    check_support(indices.back(), n, options.support_cap);

    std::vector<double> power(indices.back() + 1, 0.0);
    for (std::size_t i = 0; i < law.size(); ++i) {
        power[indices[i]] = law[i].p;
    }

    std::vector<double> result{1.0};
    for (long e = n;;) {
        if (e & 1) {
            result = convolve(result, power, options.threads);
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        power = convolve(power, power, options.threads);
    }

    for (double& m : result) {
        m = std::max(m, 0.0);
    }
    const auto first = std::find_if(result.begin(), result.end(), [](double m) { return m > 0.0; });
    const auto last = std::find_if(result.rbegin(), result.rend(), [](double m) { return m > 0.0; });
    const auto lead = static_cast<long long>(first - result.begin());
    std::vector<double> trimmed(first, last.base());
    const double total = compensated_total(trimmed);
    for (double& m : trimmed) {
        m /= total;
    }

    sum.step = step;
    sum.base = law.min_position() * Rational(n) + step * Rational(lead);
    sum.masses = std::make_shared<const std::vector<double>>(std::move(trimmed));
    return sum;
}

StandardizedLatticePMF standardize(const SumPMF& sum, const MomentSet& base_moments)
{
    if (!(base_moments.sigma > 0.0)) {
        throw Error(ErrorKind::DegenerateLaw, "cannot standardize a law with zero variance");
    }
    const double n = static_cast<double>(sum.n);
    const double scale = base_moments.sigma * std::sqrt(n);

    StandardizedLatticePMF pmf;
    pmf.n = sum.n;
    pmf.offset = (sum.base.to_double() - n * base_moments.mu) / scale;
    pmf.step_std = sum.step.to_double() / scale;
    pmf.masses = sum.masses;
    pmf.mu = base_moments.mu;
    pmf.sigma = base_moments.sigma;
    return pmf;
}

StandardizedLatticePMF standardized_sum(const Law& law, long n, const ConvolutionOptions& options)
{
    const MomentSet m = moments(law);
    if (!(m.sigma > 0.0)) {
        throw Error(ErrorKind::DegenerateLaw, "cannot standardize a law with zero variance");
    }
    return standardize(self_convolve(law, n, options), m);
}

StandardizedLatticePMF make_standardized_pmf(double offset, double step_std,
                                             std::vector<double> masses)
{
    if (!(step_std > 0.0) || masses.empty()) {
        throw std::invalid_argument("standardized pmf needs step_std > 0 and at least one mass");
    }
    StandardizedLatticePMF pmf;
    pmf.offset = offset;
    pmf.step_std = step_std;
    pmf.masses = std::make_shared<const std::vector<double>>(std::move(masses));
    return pmf;
}

ExactSumPMF exact_convolve_oracle(const ExactLaw& law, long n)
{
    require_positive_n(n);
    if (n > kExactOracleMaxN) {
        throw Error(ErrorKind::OracleScaleExceeded,
                    "exact convolution oracle is limited to n <= " +
                        std::to_string(kExactOracleMaxN));
    }
    const auto atoms = law.atoms();
    ExactSumPMF sum;
    sum.n = n;
    sum.base = atoms.front().x * Rational(n);
    if (atoms.size() == 1) {
        sum.step = Rational(1);
        sum.masses = {Rational(1)};
        return sum;
    }

    Rational step = atoms[1].x - atoms[0].x;
    for (std::size_t i = 2; i < atoms.size(); ++i) {
        step = gcd(step, atoms[i].x - atoms[i - 1].x);
    }
    sum.step = step;

    // Integer weights over the common denominator of the masses.
    Integer denominator = 1;
    for (const auto& atom : atoms) {
        denominator = boost::multiprecision::lcm(denominator, atom.p.den());
    }
    const auto indices = lattice_indices(atoms, step);
    std::vector<std::pair<std::size_t, Integer>> weights;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        weights.emplace_back(indices[i], atoms[i].p.num() * (denominator / atoms[i].p.den()));
    }

    std::vector<Integer> coeffs{1};
    for (long step_count = 0; step_count < n; ++step_count) {
        std::vector<Integer> next(coeffs.size() + indices.back(), Integer(0));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j] == 0) {
                continue;
            }
            for (const auto& [offset, w] : weights) {
                next[j + offset] += coeffs[j] * w;
            }
        }
        coeffs = std::move(next);
    }

    const Integer total_den = boost::multiprecision::pow(denominator, static_cast<unsigned>(n));
    sum.masses.reserve(coeffs.size());
    for (auto& c : coeffs) {
        sum.masses.emplace_back(std::move(c), total_den);
    }
    return sum;
}

} // namespace clt
