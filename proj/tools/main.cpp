#include "clt_lab/cli_harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    using clt::Command;
    CLI::App app{"Berry-Esseen distances, asymptotic limits and extremal laws"};
    app.require_subcommand(1);

    clt::RunConfig config;
    std::string law_path;
    std::string out_path;
    std::string objective = "interval";
    std::string mode = "two-point";

    const auto add_law = [&](CLI::App* sub) {
        sub->add_option("law", law_path, "Law file ({\"atoms\":[{\"x\":..,\"p\":..}]})")
            ->required()
            ->check(CLI::ExistingFile);
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Machine-readable output file");
    };
    const auto add_sequence = [&](CLI::App* sub) {
        sub->add_option("--n-start", config.n_start, "First n")->capture_default_str();
        sub->add_option("--n-factor", config.n_factor, "Ratio between successive n (>= 2)")
            ->capture_default_str();
        sub->add_option("--steps", config.steps, "Number of n values")->capture_default_str();
    };

    std::map<CLI::App*, Command> commands;
    const auto add = [&](const char* name, const char* help, Command command) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands[sub] = command;
        add_out(sub);
        return sub;
    };

    add_law(add("moments", "Moments mu, sigma^2, alpha, beta_1..beta_4", Command::moments));
    add_law(add("span", "Lattice span and minimal atom gap", Command::span));

    auto* distance = add("distance", "Kolmogorov and interval distance at one n", Command::distance);
    add_law(distance);
    distance->add_option("--n", config.n, "Number of summands")->required();
    distance->add_flag("--exact", config.exact, "Cross-check against exact rational convolution");

    auto* converge = add("converge", "Distances along a geometric n sequence (CSV)", Command::converge);
    add_law(converge);
    add_sequence(converge);

    add_law(add("limit", "Asymptotic limits and normalized objectives", Command::limit));

    auto* edgeworth = add("edgeworth", "Residual of the one-term Esseen expansion", Command::edgeworth);
    add_law(edgeworth);
    edgeworth->add_option("--n", config.n, "Number of summands")->required();

    auto* vonmises = add("vonmises", "von Mises moment inequality check", Command::vonmises);
    add_law(vonmises);
    vonmises->add_option("--s", config.s, "Moment order (1, 2 or 3)")->capture_default_str();

    auto* extremal = add("extremal", "Search for extremal laws", Command::extremal);
    extremal->add_option("--objective", objective, "interval | kolmogorov")
        ->check(CLI::IsMember({"interval", "kolmogorov"}))
        ->capture_default_str();
    extremal->add_option("--mode", mode, "two-point | lattice | continuous-h0")
        ->check(CLI::IsMember({"two-point", "lattice", "continuous-h0"}))
        ->capture_default_str();
    extremal->add_option("--k", config.k, "Number of atoms")->capture_default_str();
    extremal->add_option("--restarts", config.restarts, "Seeded restarts")->capture_default_str();
    extremal->add_option("--seed", config.seed, "Random seed")->capture_default_str();

    add_sequence(add("gamma-converge", "Distances for sums of unit exponentials (CSV)",
                     Command::gamma_converge));
    add("constants", "Berry-Esseen constants", Command::constants);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : clt::kExitInputError;
    }

    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) {
            config.command = command;
        }
    }
    if (!law_path.empty()) {
        config.law_path = law_path;
    }
    if (!out_path.empty()) {
        config.out_path = out_path;
    }
    config.objective = objective == "kolmogorov" ? clt::ObjectiveKind::kolmogorov
                                                 : clt::ObjectiveKind::interval;
    config.mode = mode == "lattice"         ? clt::SearchMode::lattice
                  : mode == "continuous-h0" ? clt::SearchMode::continuous_h0
                                            : clt::SearchMode::two_point;
    return clt::run(config, std::cout, std::cerr);
}
