#include "clt_lab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace clt {

namespace {

using Point = std::vector<double>;

Point affine(const Point& origin, const Point& toward, double t)
{
    Point out(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) {
        out[i] = origin[i] + t * (toward[i] - origin[i]);
    }
    return out;
}

} // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> start, const NelderMeadOptions& options)
{
    const std::size_t dim = start.size();
    NelderMeadResult result;
    result.x = std::move(start);
    result.value = f(result.x);
    if (dim == 0) {
        return result;
    }

    double step = options.initial_step;
    for (int round = 0; round <= options.restarts; ++round) {
        std::vector<Point> simplex(dim + 1, result.x);
        std::vector<double> values(dim + 1, result.value);
        for (std::size_t i = 0; i < dim; ++i) {
            simplex[i + 1][i] += step;
            values[i + 1] = f(simplex[i + 1]);
        }
        std::vector<std::size_t> order(dim + 1);

        while (result.iterations < options.max_iterations) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
            const std::size_t best = order.front();
            const std::size_t worst = order.back();
            const std::size_t second_worst = order[dim - 1];

            double size = 0.0;
            for (std::size_t v = 0; v <= dim; ++v) {
                for (std::size_t i = 0; i < dim; ++i) {
                    size = std::max(size, std::abs(simplex[v][i] - simplex[best][i]));
                }
            }
            if (values[worst] - values[best] <= options.f_tolerance ||
                size <= options.x_tolerance) {
                break;
            }
            ++result.iterations;

            Point centroid(dim, 0.0);
            for (std::size_t v = 0; v <= dim; ++v) {
                if (v == worst) {
                    continue;
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    centroid[i] += simplex[v][i] / static_cast<double>(dim);
                }
            }

            const Point reflected = affine(centroid, simplex[worst], -1.0);
            const double f_reflected = f(reflected);
            if (f_reflected < values[best]) {
                const Point expanded = affine(centroid, simplex[worst], -2.0);
                const double f_expanded = f(expanded);
                if (f_expanded < f_reflected) {
                    simplex[worst] = expanded;
                    values[worst] = f_expanded;
                } else {
                    simplex[worst] = reflected;
                    values[worst] = f_reflected;
                }
            } else if (f_reflected < values[second_worst]) {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            } else {
                const bool outside = f_reflected < values[worst];
                const Point contracted =
                    outside ? affine(centroid, reflected, 0.5) : affine(centroid, simplex[worst], 0.5);
                const double f_contracted = f(contracted);
                if (f_contracted < std::min(f_reflected, values[worst])) {
                    simplex[worst] = contracted;
                    values[worst] = f_contracted;
                } else {
                    for (std::size_t v = 0; v <= dim; ++v) {
                        if (v == best) {
                            continue;
                        }
                        simplex[v] = affine(simplex[best], simplex[v], 0.5);
                        values[v] = f(simplex[v]);
                    }
                }
            }

            const auto best_it = std::min_element(values.begin(), values.end());
            result.trace.push_back(std::min(*best_it, result.value));
        }

        const auto best_it = std::min_element(values.begin(), values.end());
        if (*best_it <= result.value) {
            result.value = *best_it;
            result.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
        }
        step *= 0.5;
    }
    return result;
}

} // namespace clt
