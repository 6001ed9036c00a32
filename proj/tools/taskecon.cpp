#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "taskecon/acceptance.hpp"
#include "taskecon/errors.hpp"
#include "taskecon/kernels.hpp"
#include "taskecon/scenario.hpp"

using namespace taskecon;

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string opt(const std::optional<double>& v) { return v ? g17(*v) : std::string(); }

int run_spec(const ScenarioSpec& spec, const std::string& out) {
    const auto result = run(spec);
    std::cout << format_summary(result);
    if (!out.empty()) write_outputs(result, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Task-based automation economy simulator"};
    app.require_subcommand(1);

    std::string config, out, preset_name, key, only;
    double phi = 0.608, K = 4.6, from = 0.0, to = 0.0;
    int points = 101, steps = 11;

    auto* run_cmd = app.add_subcommand("run", "Run a scenario from a config file");
    run_cmd->add_option("--config", config, "Config file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out, "Output directory");

    auto* preset_cmd = app.add_subcommand("preset", "Run a named preset");
    preset_cmd->add_option("name", preset_name, "Preset name")->required();
    preset_cmd->add_option("--out", out, "Output directory");

    auto* fpf_cmd = app.add_subcommand("fpf", "Factor price frontier as CSV");
    fpf_cmd->add_option("--phi", phi, "Automated share")->required();
    fpf_cmd->add_option("--points", points, "Number of points")->check(CLI::PositiveNumber);

    auto* static_cmd = app.add_subcommand("static", "Static equilibrium at (K, phi)");
    static_cmd->add_option("--K", K, "Capital")->required();
    static_cmd->add_option("--phi", phi, "Automated share")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one config key and summarize each run");
    sweep_cmd->add_option("--key", key, "Config key")->required();
    sweep_cmd->add_option("--from", from, "First value")->required();
    sweep_cmd->add_option("--to", to, "Last value")->required();
    sweep_cmd->add_option("--steps", steps, "Number of values")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--config", config, "Base config (default: business_as_usual)")->check(CLI::ExistingFile);

    auto* curve_cmd = app.add_subcommand("curve-fig7", "Asymptotic wage growth against the automation rate");
    curve_cmd->add_option("--points", points, "Grid points on (0, 0.25]")->check(CLI::PositiveNumber);

    auto* check_cmd = app.add_subcommand("check", "Run the acceptance checks");
    check_cmd->add_option("--only", only, "Run a single check tag");
    check_cmd->add_option("--config", config, "Take economy and preferences from a config")->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return run_spec(load_config(config), out);
        if (*preset_cmd) return run_spec(preset(preset_name), out);

        if (*fpf_cmd) {
            const EconomyParams params;
            params.validate();
            const auto curve = parallel::fpf_curve(params, AutomationShare::from_automated(phi),
                                                   static_cast<std::size_t>(points));
            std::cout << "R,w\n";
            for (const auto& p : curve) std::cout << g17(p.R) << ',' << g17(p.w) << '\n';
            return 0;
        }

        if (*static_cmd) {
            const auto eq = static_equilibrium(EconomyParams{}, K, phi);
            std::cout << "region: " << static_cast<int>(eq.region) << '\n'
                      << "Y: " << g17(eq.Y) << '\n'
                      << "w: " << g17(eq.w) << '\n'
                      << "R: " << g17(eq.R) << '\n'
                      << "labor_share: " << g17(eq.labor_share) << '\n';
            return 0;
        }

        if (*sweep_cmd) {
            const ScenarioSpec base = config.empty() ? preset("business_as_usual") : load_config(config);
            std::vector<ScenarioSpec> specs;
            for (int i = 0; i < steps; ++i) {
                const double v = steps == 1 ? from : from + (to - from) * i / (steps - 1);
                auto spec = base;
                apply_setting(spec, key, g17(v));
                spec.validate();
                specs.push_back(spec);
            }
            const auto results = parallel::map_indexed(specs.size(), [&](std::size_t i) { return run(specs[i]).summary; });
            std::cout << key
                      << ",collapse_time,reentry_time,full_automation_time,peak_wage_time,terminal_output_growth,"
                         "terminal_wage_growth\n";
            for (std::size_t i = 0; i < results.size(); ++i) {
                const auto& s = results[i];
                const double v = steps == 1 ? from : from + (to - from) * static_cast<double>(i) / (steps - 1);
                std::cout << g17(v) << ',' << opt(s.collapse_time) << ',' << opt(s.reentry_time) << ','
                          << opt(s.full_automation_time) << ',' << g17(s.peak_wage_time) << ','
                          << g17(s.terminal_output_growth) << ',' << g17(s.terminal_wage_growth) << '\n';
            }
            return 0;
        }

        if (*curve_cmd) {
            const EconomyParams econ;
            const PreferenceParams prefs;
            std::vector<double> grid;
            for (int i = 1; i <= points; ++i) grid.push_back(0.25 * i / points);
            const auto curve = wage_growth_curve(econ, prefs, grid);
            const auto sims = parallel::map_indexed(
                grid.size(), [&](std::size_t i) { return simulated_wage_growth(econ, prefs, grid[i], 0.608, 4.6); });
            std::cout << "lambda_g,predicted_growth,simulated_growth\n";
            for (std::size_t i = 0; i < grid.size(); ++i)
                std::cout << g17(grid[i]) << ',' << g17(curve[i].growth) << ',' << g17(sims[i]) << '\n';
            return 0;
        }

        if (*check_cmd) {
            AcceptanceOptions opts;
            opts.only = only;
            if (!config.empty()) {
                const auto spec = load_config(config);
                opts.economy = spec.economy;
                opts.preferences = spec.preferences;
            }
            bool all = true;
            for (const auto& r : run_acceptance(opts)) {
                std::cout << format_check(r) << '\n';
                all = all && r.pass;
            }
            return all ? 0 : 3;
        }
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
