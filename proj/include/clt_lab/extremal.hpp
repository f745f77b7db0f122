#pragma once

#include "clt_lab/law.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace clt {

enum class ObjectiveKind { interval, kolmogorov };
enum class SearchMode { two_point, lattice, continuous_h0 };

const char* to_string(ObjectiveKind kind);
const char* to_string(SearchMode mode);

struct SearchResult {
    Law best_law;
    double objective_value = 0.0;
    ObjectiveKind objective_kind = ObjectiveKind::interval;
    std::vector<std::pair<std::size_t, double>> trace;
    SearchMode mode = SearchMode::two_point;
    /// Two-point scans only: the optimal mass spread |q - p|.
    std::optional<double> spread;
};

/// (sigma^3 / beta_3) * interval limit. Throws DegenerateLaw.
double interval_objective(const Law& law);

/// (sigma^3 / beta_3) * Kolmogorov limit. Throws DegenerateLaw.
double kolmogorov_objective(const Law& law);

/// Objective with the non-lattice branch forced (h = 0).
double objective_h0(const Law& law, ObjectiveKind kind);

double objective(const Law& law, ObjectiveKind kind);

/// Two-point law on {0, 1} with mass spread t = q - p in [0, 1).
Law two_point_law(double spread);

/// Uniform grid over t in [0, 1) followed by golden-section refinement of the
/// best cell to 1e-10. grid_size >= 1000.
SearchResult two_point_scan(ObjectiveKind kind, int grid_size = 10000);

struct SearchOptions {
    int lattice_max = 12;
    std::size_t max_iterations = 20000;
    unsigned threads = 0;
    /// Mass logits for the first restart (size k); defaults to all zeros,
    /// i.e. equal masses.
    std::optional<std::vector<double>> initial_logits;
    /// Positions for the first restart in lattice mode (k distinct integers
    /// in 0..lattice_max).
    std::optional<std::vector<int>> initial_positions;
};

inline constexpr int kMaxSearchAtoms = 8;

/// Derivative-free search over k-atom laws. Masses are parametrized by k - 1
/// free logits (softmax, last logit pinned to 0). In lattice mode each restart
/// draws k distinct positions from 0..lattice_max; in continuous_h0 mode the
/// positions are free reals and the objective uses h = 0. Restarts are seeded
/// from `seed` and run concurrently; the result is deterministic.
/// Throws InvalidK unless 2 <= k <= 8 (and k <= lattice_max + 1 in lattice
/// mode).
SearchResult search_k_atoms(int k, SearchMode mode, ObjectiveKind kind, int restarts,
                            std::uint64_t seed, const SearchOptions& options = {});

} // namespace clt
