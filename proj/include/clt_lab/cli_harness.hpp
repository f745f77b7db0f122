#pragma once

#include "clt_lab/extremal.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace clt {

enum class Command {
    moments,
    span,
    distance,
    converge,
    limit,
    edgeworth,
    vonmises,
    extremal,
    gamma_converge,
    constants,
};

struct RunConfig {
    Command command = Command::constants;
    std::optional<std::string> law_path;
    long n = 1;
    long n_start = 4;
    long n_factor = 2;
    int steps = 1;
    int s = 2;
    ObjectiveKind objective = ObjectiveKind::interval;
    SearchMode mode = SearchMode::two_point;
    int k = 4;
    int restarts = 32;
    std::uint64_t seed = 0;
    std::optional<std::string> out_path;
    bool exact = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitScaleError = 3;

/// Header of the CSV written by `converge` and `gamma-converge`.
inline constexpr const char* kConvergeCsvHeader =
    "n,d_kolm,d_interval,sqrtn_d_kolm,sqrtn_d_interval,limit_kolm,limit_interval";

/// Decimal rendering with 15 significant digits, never in exponent form.
std::string format_decimal15(double value);

/// Executes one command. Human-readable results go to `out`, one-line
/// diagnostics to `err`; machine-readable output is written to
/// config.out_path when set. Returns 0, 2 (input error) or 3 (scale error).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace clt
