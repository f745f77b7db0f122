#include "clt_lab/cli_harness.hpp"

#include "clt_lab/asymptotics.hpp"
#include "clt_lab/convolution.hpp"
#include "clt_lab/deviation.hpp"
#include "clt_lab/error.hpp"
#include "clt_lab/gamma_family.hpp"
#include "clt_lab/law_io.hpp"
#include "clt_lab/normal.hpp"
#include "clt_lab/vonmises.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace clt {

namespace {

using nlohmann::ordered_json;

struct Output {
    std::ostringstream text;
    std::string machine; // written to out_path when set
};

ExactLaw require_law(const RunConfig& config)
{
    if (!config.law_path) {
        throw Error(ErrorKind::ParseError, "this command needs a law file");
    }
    return load_law_file(*config.law_path);
}

void require_n(long n)
{
    if (n < 1) {
        throw std::invalid_argument("--n must be >= 1");
    }
}

std::vector<long> n_sequence(const RunConfig& config)
{
    if (config.n_start < 1) {
        throw std::invalid_argument("--n-start must be >= 1");
    }
    if (config.n_factor < 2) {
        throw std::invalid_argument("--n-factor must be >= 2");
    }
    if (config.steps < 1) {
        throw std::invalid_argument("--steps must be >= 1");
    }
    std::vector<long> ns;
    long n = config.n_start;
    for (int i = 0; i < config.steps; ++i) {
        ns.push_back(n);
        if (i + 1 < config.steps && n > std::numeric_limits<long>::max() / config.n_factor) {
            throw Error(ErrorKind::ScaleExceeded, "n sequence overflows");
        }
        n *= config.n_factor;
    }
    return ns;
}

std::string side_name(Side side)
{
    return side == Side::at ? "at" : "left-limit";
}

void describe_location(std::ostream& os, const ExtremumLocation& loc)
{
    if (loc.index == ExtremumLocation::kAtInfinity) {
        os << "infinity";
    } else {
        os << "atom " << loc.index << " (" << side_name(loc.side) << ", x = " << loc.x << ")";
    }
}

struct ConvergeRow {
    long n;
    double d_kolm;
    double d_interval;
    double limit_kolm;
    double limit_interval;
};

std::string converge_csv(const std::vector<ConvergeRow>& rows)
{
    std::string csv = std::string(kConvergeCsvHeader) + "\n";
    for (const auto& row : rows) {
        const double root_n = std::sqrt(static_cast<double>(row.n));
        csv += std::to_string(row.n) + "," + format_decimal15(row.d_kolm) + "," +
               format_decimal15(row.d_interval) + "," + format_decimal15(root_n * row.d_kolm) + "," +
               format_decimal15(root_n * row.d_interval) + "," + format_decimal15(row.limit_kolm) +
               "," + format_decimal15(row.limit_interval) + "\n";
    }
    return csv;
}

void print_converge_table(std::ostream& os, const std::vector<ConvergeRow>& rows)
{
    os << std::setw(8) << "n" << std::setw(18) << "sqrt(n) d_kolm" << std::setw(20)
       << "sqrt(n) d_interval" << '\n';
    for (const auto& row : rows) {
        const double root_n = std::sqrt(static_cast<double>(row.n));
        os << std::setw(8) << row.n << std::setw(18) << root_n * row.d_kolm << std::setw(20)
           << root_n * row.d_interval << '\n';
    }
    if (!rows.empty()) {
        os << "limits: kolmogorov " << rows.front().limit_kolm << ", interval "
           << rows.front().limit_interval << '\n';
    }
}

void cmd_moments(const RunConfig& config, Output& out)
{
    const Law law = require_law(config).to_law();
    const MomentSet m = moments(law);
    out.text << "atoms  " << law.size() << '\n'
             << "mu     " << m.mu << '\n'
             << "sigma2 " << m.sigma2 << '\n'
             << "sigma  " << m.sigma << '\n'
             << "alpha  " << m.alpha << '\n';
    for (int s = 1; s <= 4; ++s) {
        out.text << "beta_" << s << " " << m.beta[s] << '\n';
    }
    out.machine = ordered_json{{"mu", m.mu},
                               {"sigma2", m.sigma2},
                               {"sigma", m.sigma},
                               {"alpha", m.alpha},
                               {"beta", {m.beta[1], m.beta[2], m.beta[3], m.beta[4]}}}
                      .dump(2);
}

void cmd_span(const RunConfig& config, Output& out)
{
    const Law law = require_law(config).to_law();
    const Rational h = lattice_span(law);
    const Rational gap = min_gap(law);
    out.text << "lattice span h  " << h << '\n' << "minimal gap     " << gap << '\n';
    out.machine = ordered_json{{"h", h.str()}, {"min_gap", gap.str()}, {"atoms", law.size()}}.dump(2);
}

void cmd_distance(const RunConfig& config, Output& out)
{
    require_n(config.n);
    const ExactLaw exact_law = require_law(config);
    const Law law = exact_law.to_law();
    const StandardizedLatticePMF pmf = standardized_sum(law, config.n);
    const DeviationExtrema ext = deviation_extrema(pmf);
    const double root_n = std::sqrt(static_cast<double>(config.n));

    out.text << "n                    " << config.n << '\n'
             << "support points       " << pmf.size() << '\n'
             << "sup D                " << ext.sup_dev << " at ";
    describe_location(out.text, ext.arg_sup);
    out.text << "\ninf D                " << ext.inf_dev << " at ";
    describe_location(out.text, ext.arg_inf);
    out.text << "\nkolmogorov distance  " << kolmogorov_distance(ext) << '\n'
             << "interval distance    " << interval_distance(ext) << '\n'
             << "sqrt(n) kolmogorov   " << root_n * kolmogorov_distance(ext) << '\n'
             << "sqrt(n) interval     " << root_n * interval_distance(ext) << '\n';

    ordered_json doc{{"n", config.n},
                     {"sup_dev", ext.sup_dev},
                     {"inf_dev", ext.inf_dev},
                     {"d_kolm", kolmogorov_distance(ext)},
                     {"d_interval", interval_distance(ext)}};

    if (config.exact) {
        const ExactSumPMF sum = exact_convolve_oracle(exact_law, config.n);
        std::vector<double> masses;
        masses.reserve(sum.masses.size());
        for (const auto& m : sum.masses) {
            masses.push_back(m.to_double());
        }
        // Align the floating pmf (which may be trimmed) with the exact one.
        const SumPMF floating = self_convolve(law, config.n);
        const auto shift = ((floating.base - sum.base) / sum.step).num().convert_to<std::size_t>();
        double max_diff = 0.0;
        for (std::size_t k = 0; k < masses.size(); ++k) {
            const double f = (k >= shift && k - shift < floating.size()) ? floating.values()[k - shift] : 0.0;
            max_diff = std::max(max_diff, std::abs(f - masses[k]));
        }
        const MomentSet m = moments(law);
        const StandardizedLatticePMF exact_pmf = standardize(
            SumPMF{sum.n, sum.base, sum.step, std::make_shared<const std::vector<double>>(masses)}, m);
        const DeviationExtrema exact_ext = deviation_extrema(exact_pmf);
        out.text << "exact oracle: max |mass diff| " << max_diff << ", kolmogorov "
                 << kolmogorov_distance(exact_ext) << ", interval " << interval_distance(exact_ext)
                 << '\n';
        doc["exact_max_mass_diff"] = max_diff;
        doc["exact_d_kolm"] = kolmogorov_distance(exact_ext);
        doc["exact_d_interval"] = interval_distance(exact_ext);
    }
    out.machine = doc.dump(2);
}

void cmd_converge(const RunConfig& config, Output& out)
{
    const Law law = require_law(config).to_law();
    const double limit_kolm = kolmogorov_limit(law);
    const double limit_interval = interval_limit(law).value;
    std::vector<ConvergeRow> rows;
    for (long n : n_sequence(config)) {
        const DeviationExtrema ext = deviation_extrema(standardized_sum(law, n));
        rows.push_back({n, kolmogorov_distance(ext), interval_distance(ext), limit_kolm, limit_interval});
    }
    print_converge_table(out.text, rows);
    out.machine = converge_csv(rows);
}

void cmd_gamma_converge(const RunConfig& config, Output& out)
{
    const ShapeParams exponential{0.0, 1.0, 2.0};
    const double limit_kolm = kolmogorov_limit(exponential);
    const double limit_interval = interval_limit(exponential).value;
    std::vector<ConvergeRow> rows;
    for (long n : n_sequence(config)) {
        const DeviationExtrema ext = smooth_deviation_extrema(n);
        rows.push_back({n, kolmogorov_distance(ext), interval_distance(ext), limit_kolm, limit_interval});
    }
    print_converge_table(out.text, rows);
    out.machine = converge_csv(rows);
}

void cmd_limit(const RunConfig& config, Output& out)
{
    const Law law = require_law(config).to_law();
    const LimitReport report = interval_limit(law);
    const double kolm = kolmogorov_limit(law);
    const double obj = interval_objective(law);
    const double kobj = kolmogorov_objective(law);
    out.text << "branch               " << to_string(report.branch) << '\n'
             << "interval limit L     " << report.value << '\n'
             << "  h term             " << report.h_term << '\n'
             << "  alpha term         " << report.alpha_term << '\n'
             << "  exp term           " << report.exp_term << '\n';
    if (report.y0) {
        out.text << "  y0                 " << *report.y0 << '\n';
    }
    out.text << "kolmogorov limit     " << kolm << '\n'
             << "objective            " << obj << '\n'
             << "kolmogorov objective " << kobj << '\n';
    ordered_json doc{{"branch", to_string(report.branch)},
                     {"value", report.value},
                     {"h_term", report.h_term},
                     {"alpha_term", report.alpha_term},
                     {"exp_term", report.exp_term},
                     {"y0", report.y0 ? ordered_json(*report.y0) : ordered_json(nullptr)},
                     {"kolmogorov_limit", kolm},
                     {"interval_objective", obj},
                     {"kolmogorov_objective", kobj}};
    out.machine = doc.dump(2);
}

void cmd_edgeworth(const RunConfig& config, Output& out)
{
    require_n(config.n);
    const Law law = require_law(config).to_law();
    const double residual = expansion_residual_sup(law, config.n);
    const double scaled = std::sqrt(static_cast<double>(config.n)) * residual;
    out.text << "n                    " << config.n << '\n'
             << "sup |F_n - esseen|   " << residual << '\n'
             << "sqrt(n) * residual   " << scaled << '\n';
    out.machine = ordered_json{{"n", config.n}, {"residual", residual}, {"sqrtn_residual", scaled}}.dump(2);
}

void cmd_vonmises(const RunConfig& config, Output& out)
{
    const Law law = require_law(config).to_law();
    const VonMisesReport r = vonmises_check(law, config.s);
    const bool convex = log_moment_convexity(law);
    const bool pair = pair_identity_check(law);
    out.text << "eta                  " << r.eta << '\n'
             << "eta * beta_" << r.s << "         " << r.lhs << '\n'
             << "2 * beta_" << r.s + 1 << "           " << r.rhs << '\n'
             << "holds                " << std::boolalpha << r.holds << '\n'
             << "equality             " << r.equality << '\n'
             << "predicted equality   " << r.predicted_equality << '\n'
             << "log-moment convexity " << convex << '\n'
             << "pair identity        " << pair << '\n';
    out.machine = ordered_json{{"eta", r.eta.str()},
                               {"s", r.s},
                               {"lhs", r.lhs},
                               {"rhs", r.rhs},
                               {"holds", r.holds},
                               {"equality", r.equality},
                               {"predicted_equality", r.predicted_equality},
                               {"log_moment_convexity", convex},
                               {"pair_identity", pair}}
                      .dump(2);
}

void cmd_extremal(const RunConfig& config, Output& out)
{
    const SearchResult result = config.mode == SearchMode::two_point
                                    ? two_point_scan(config.objective)
                                    : search_k_atoms(config.k, config.mode, config.objective,
                                                     config.restarts, config.seed);
    out.text << "objective            " << to_string(result.objective_kind) << '\n'
             << "mode                 " << to_string(result.mode) << '\n'
             << std::setprecision(12) << "value                " << result.objective_value << '\n';
    if (result.spread) {
        out.text << "t*                   " << *result.spread << '\n';
    }
    ordered_json atoms = ordered_json::array();
    out.text << "best law:\n";
    for (const auto& atom : result.best_law.atoms()) {
        out.text << "  x = " << atom.x << "  p = " << atom.p << '\n';
        atoms.push_back({{"x", atom.x.str()}, {"p", atom.p}});
    }
    ordered_json doc{{"objective", to_string(result.objective_kind)},
                     {"mode", to_string(result.mode)},
                     {"value", result.objective_value},
                     {"atoms", atoms}};
    if (result.spread) {
        doc["spread"] = *result.spread;
    }
    out.machine = doc.dump(2);
}

void cmd_constants(Output& out)
{
    const BerryEsseenConstants c = constants();
    out.text << std::setprecision(12) << "c_inf_BE             " << c.c_inf_be << '\n'
             << "c_inf_BE(intervals)  " << c.c_inf_be_intervals << '\n'
             << "c_BE lower bound     " << c.c_be_lower << '\n'
             << "c_BE upper bound     " << c.c_be_upper << '\n';
    out.machine = ordered_json{{"c_inf_be", c.c_inf_be},
                               {"c_inf_be_intervals", c.c_inf_be_intervals},
                               {"c_be_lower", c.c_be_lower},
                               {"c_be_upper", c.c_be_upper}}
                      .dump(2);
}

void dispatch(const RunConfig& config, Output& out)
{
    switch (config.command) {
    case Command::moments: return cmd_moments(config, out);
    case Command::span: return cmd_span(config, out);
    case Command::distance: return cmd_distance(config, out);
    case Command::converge: return cmd_converge(config, out);
    case Command::limit: return cmd_limit(config, out);
    case Command::edgeworth: return cmd_edgeworth(config, out);
    case Command::vonmises: return cmd_vonmises(config, out);
    case Command::extremal: return cmd_extremal(config, out);
    case Command::gamma_converge: return cmd_gamma_converge(config, out);
    case Command::constants: return cmd_constants(out);
    }
}

} // namespace

std::string format_decimal15(double value)
{
    if (!std::isfinite(value)) {
        return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
    }
    if (value == 0.0) {
        return "0";
    }
    // The exponent of the value after rounding to 15 significant digits.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", value);
    const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
    const int decimals = std::max(0, 14 - exponent);
    std::vector<char> wide(static_cast<std::size_t>(decimals) + 400);
    std::snprintf(wide.data(), wide.size(), "%.*f", decimals, value);
    return wide.data();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Output result;
    result.text << std::setprecision(12);
    try {
        dispatch(config, result);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return is_scale_error(e.kind()) ? kExitScaleError : kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary);
        file << result.machine;
        if (!file) {
            err << "error: cannot write " << *config.out_path << '\n';
            return kExitInputError;
        }
    }
    out << result.text.str();
    return kExitOk;
}

} // namespace clt
