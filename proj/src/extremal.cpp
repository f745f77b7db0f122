#include "clt_lab/extremal.hpp"

#include "clt_lab/asymptotics.hpp"
#include "clt_lab/error.hpp"
#include "clt_lab/nelder_mead.hpp"
#include "clt_lab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace clt {

namespace {

double moment_ratio(const MomentSet& m)
{
    if (!(m.beta[3] > 0.0)) {
        throw Error(ErrorKind::DegenerateLaw, "law has beta_3 = 0");
    }
    return m.sigma2 * m.sigma / m.beta[3];
}

double limit_value(const ShapeParams& shape, ObjectiveKind kind)
{
    return kind == ObjectiveKind::interval ? interval_limit(shape).value : kolmogorov_limit(shape);
}

std::vector<double> softmax(const std::vector<double>& logits)
{
    const double top = *std::max_element(logits.begin(), logits.end());
    std::vector<double> w(logits.size());
    double total = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        w[i] = std::exp(logits[i] - top);
        total += w[i];
    }
    for (double& x : w) {
        x /= total;
    }
    return w;
}

// Atoms with underflowed (zero) mass are absent.
std::optional<Law> law_from(const std::vector<Rational>& positions, const std::vector<double>& masses)
{
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (masses[i] > 0.0) {
            atoms.push_back(Atom{positions[i], masses[i]});
        }
    }
    Law law = Law::make(std::move(atoms));
    if (law.size() < 2) {
        return std::nullopt;
    }
    return law;
}

struct RestartOutcome {
    std::optional<Law> law;
    double value = -1.0;
    std::vector<double> trace;
};

constexpr double kDegeneratePenalty = 1.0;

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tolerance, std::vector<std::pair<std::size_t, double>>& trace)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    std::size_t iteration = 0;
    while (b - a > tolerance) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        trace.emplace_back(++iteration, std::max(fc, fd));
    }
    return fc >= fd ? c : d;
}

} // namespace

const char* to_string(ObjectiveKind kind)
{
    return kind == ObjectiveKind::interval ? "interval" : "kolmogorov";
}

const char* to_string(SearchMode mode)
{
    switch (mode) {
    case SearchMode::two_point: return "two_point";
    case SearchMode::lattice: return "lattice";
    case SearchMode::continuous_h0: return "continuous_h0";
    }
    return "unknown";
}

double interval_objective(const Law& law)
{
    return objective(law, ObjectiveKind::interval);
}

double kolmogorov_objective(const Law& law)
{
    return objective(law, ObjectiveKind::kolmogorov);
}

double objective(const Law& law, ObjectiveKind kind)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::DegenerateLaw, "law needs at least two atoms");
    }
    const MomentSet m = moments(law);
    const ShapeParams shape{lattice_span(law).to_double(), m.sigma, m.alpha};
    return moment_ratio(m) * limit_value(shape, kind);
}

double objective_h0(const Law& law, ObjectiveKind kind)
{
    if (law.size() < 2) {
        throw Error(ErrorKind::DegenerateLaw, "law needs at least two atoms");
    }
    const MomentSet m = moments(law);
    return moment_ratio(m) * limit_value(ShapeParams{0.0, m.sigma, m.alpha}, kind);
}

Law two_point_law(double spread)
{
    if (!(spread >= 0.0 && spread < 1.0)) {
        throw std::invalid_argument("two-point mass spread must lie in [0, 1)");
    }
    return Law::make({Atom{Rational(0), (1.0 - spread) / 2.0}, Atom{Rational(1), (1.0 + spread) / 2.0}});
}

SearchResult two_point_scan(ObjectiveKind kind, int grid_size)
{
    if (grid_size < 1000) {
        throw std::invalid_argument("two_point_scan needs grid_size >= 1000");
    }
    const auto value_at = [kind](double t) { return objective(two_point_law(t), kind); };

    const double cell = 1.0 / grid_size;
    int best = 0;
    double best_value = value_at(0.0);
    for (int i = 1; i < grid_size; ++i) {
        const double v = value_at(i * cell);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }

    std::vector<std::pair<std::size_t, double>> trace{{0, best_value}};
    const double lo = std::max(0, best - 1) * cell;
    const double hi = std::min(grid_size - 1, best + 1) * cell;
    double t = golden_section_max(value_at, lo, hi, 1e-10, trace);
    // The maximizer may sit on the boundary t = 0.
    if (value_at(lo) >= value_at(t)) {
        t = lo;
    }
    return SearchResult{.best_law = two_point_law(t),
                        .objective_value = value_at(t),
                        .objective_kind = kind,
                        .trace = std::move(trace),
                        .mode = SearchMode::two_point,
                        .spread = t};
}

SearchResult search_k_atoms(int k, SearchMode mode, ObjectiveKind kind, int restarts,
                            std::uint64_t seed, const SearchOptions& options)
{
    if (mode == SearchMode::two_point) {
        if (k != 2) {
            throw Error(ErrorKind::InvalidK, "two-point mode requires k = 2");
        }
        return two_point_scan(kind);
    }
    if (k < 2 || k > kMaxSearchAtoms || (mode == SearchMode::lattice && k > options.lattice_max + 1)) {
        throw Error(ErrorKind::InvalidK, "k must lie in [2, " + std::to_string(kMaxSearchAtoms) +
                                             "] and fit on the lattice, got " + std::to_string(k));
    }
    if (restarts < 1) {
        throw std::invalid_argument("search needs at least one restart");
    }
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t free_logits = kk - 1;

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    const auto run_restart = [&](std::size_t r) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        std::vector<double> start(free_logits, 0.0);
        if (r == 0 && options.initial_logits) {
            const auto& init = *options.initial_logits;
            for (std::size_t i = 0; i < free_logits; ++i) {
                start[i] = init.at(i) - init.at(kk - 1);
            }
        } else if (r > 0) {
            for (double& v : start) {
                v = 4.0 * unit(rng) - 2.0;
            }
        }

        std::vector<Rational> lattice_positions;
        if (mode == SearchMode::lattice) {
            std::vector<int> grid(static_cast<std::size_t>(options.lattice_max) + 1);
            std::iota(grid.begin(), grid.end(), 0);
            if (r == 0 && options.initial_positions) {
                grid = *options.initial_positions;
            } else {
                std::shuffle(grid.begin(), grid.end(), rng);
            }
            grid.resize(kk);
            for (int g : grid) {
                lattice_positions.emplace_back(g);
            }
        } else {
            for (std::size_t i = 0; i < kk; ++i) {
                start.push_back(4.0 * unit(rng));
            }
        }

        const auto decode = [&](const std::vector<double>& params) {
            std::vector<double> logits(params.begin(), params.begin() + static_cast<long>(free_logits));
            logits.push_back(0.0);
            const auto masses = softmax(logits);
            if (mode == SearchMode::lattice) {
                return law_from(lattice_positions, masses);
            }
            std::vector<Rational> positions;
            for (std::size_t i = 0; i < kk; ++i) {
                positions.push_back(Rational::from_double(params[free_logits + i]));
            }
            return law_from(positions, masses);
        };
        const auto value_of = [&](const Law& law) {
            return mode == SearchMode::lattice ? objective(law, kind) : objective_h0(law, kind);
        };
        const auto loss = [&](const std::vector<double>& params) {
            for (double p : params) {
                if (!std::isfinite(p)) {
                    return kDegeneratePenalty;
                }
            }
            const auto law = decode(params);
            return law ? -value_of(*law) : kDegeneratePenalty;
        };

        NelderMeadOptions nm;
        nm.max_iterations = options.max_iterations;
        nm.restarts = 3;
        const NelderMeadResult fit = nelder_mead_minimize(loss, start, nm);

        RestartOutcome& outcome = outcomes[r];
        outcome.law = decode(fit.x);
        outcome.value = outcome.law ? value_of(*outcome.law) : -1.0;
        outcome.trace = fit.trace;
    };

    parallel_for(
        outcomes.size(),
        [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r) {
                run_restart(r);
            }
        },
        options.threads, 1);

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].value > outcomes[best].value) {
            best = r;
        }
    }
    if (!outcomes[best].law) {
        throw Error(ErrorKind::DegenerateLaw, "search collapsed to a point mass on every restart");
    }

    std::vector<std::pair<std::size_t, double>> trace;
    for (std::size_t i = 0; i < outcomes[best].trace.size(); ++i) {
        trace.emplace_back(i + 1, -outcomes[best].trace[i]);
    }
    return SearchResult{.best_law = *outcomes[best].law,
                        .objective_value = outcomes[best].value,
                        .objective_kind = kind,
                        .trace = std::move(trace),
                        .mode = mode,
                        .spread = std::nullopt};
}

} // namespace clt
