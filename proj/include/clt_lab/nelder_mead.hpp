#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace clt {

struct NelderMeadOptions {
    double initial_step = 1.0;
    // Stops when the value spread or the simplex size falls below tolerance.
    double f_tolerance = 1e-15;
    double x_tolerance = 1e-12;
    std::size_t max_iterations = 20000;
    // Fresh simplexes built around the incumbent after convergence.
    int restarts = 2;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::vector<double> trace; // best value after each iteration
};

/// Minimizes f by the Nelder-Mead downhill simplex (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> start,
                                      const NelderMeadOptions& options = {});

} // namespace clt
