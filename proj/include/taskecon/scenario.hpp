#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taskecon/analysis.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

struct DistributionSpec {
    std::string family = "pareto";  // pareto | power | mixture
    double lambda_g = 0.01;
    double T = 20.0;
    double beta = 1.0;
    double omega = 0.88;

    bool operator==(const DistributionSpec&) const = default;
};

struct RndSpec {
    double theta = 0.3;
    double gamma_lambda_g = 0.01;
    double s = 0.3;
    double c = 0.9;

    bool operator==(const RndSpec&) const = default;
};

struct SpecificSpec {
    double delta_mass = 0.1;
    double k_spec_max = 15.0;

    bool operator==(const SpecificSpec&) const = default;
};

enum class PolicyKind { Ramsey, ConstantSavings };

struct ScenarioSpec {
    std::string name = "custom";
    DistributionSpec distribution;
    EconomyParams economy;
    PreferenceParams preferences;
    double phi0 = 0.608;
    double K0 = 4.6;
    PolicyKind policy = PolicyKind::Ramsey;
    std::optional<double> savings_rate;  // constant-savings mode; defaults to the long-run rate
    SolverSettings solver;

    std::optional<FixedFactorParams> fixed_factor;
    std::optional<double> nostalgic_cap;
    std::optional<RndSpec> rnd;
    std::optional<double> skills_upsilon_lambda;
    std::optional<SpecificSpec> specific;

    bool svg = false;

    bool operator==(const ScenarioSpec&) const = default;

    void validate() const;
    CalibratedAutomation automation() const;
    Policy make_policy() const;
};

std::vector<std::string> preset_names();
/// Throws ConfigError for unknown names.
ScenarioSpec preset(std::string_view name);

/// Applies one `key = value` setting; throws ConfigError naming the key.
void apply_setting(ScenarioSpec& spec, std::string_view key, std::string_view value);

ScenarioSpec parse_config(std::string_view text);
ScenarioSpec load_config(const std::filesystem::path& path);
/// Canonical config text; parse_config(dump_config(s)) == s.
std::string dump_config(const ScenarioSpec& spec);

struct RunSummary {
    std::optional<double> collapse_time;  // first region-2 entry
    std::optional<double> reentry_time;
    std::optional<double> full_automation_time;
    double peak_wage_time = 0.0;
    double terminal_output_growth = 0.0;
    double terminal_wage_growth = 0.0;
};

RunSummary summarize(const Trajectory& traj);

struct SkillRow {
    double t = 0.0;
    SkillWages wages;
};

struct SpecificRow {
    double k_spec = 0.0;
    SpecificCapitalReturns returns;
};

struct RunResult {
    ScenarioSpec spec;
    Trajectory trajectory;
    std::optional<RegimeReport> regime;
    RunSummary summary;

    std::optional<Trajectory> uncapped;
    std::vector<double> output_gap;
    std::optional<double> bind_time;

    std::vector<double> tech;
    std::vector<double> tech_growth;
    std::optional<double> blowup_time;

    std::vector<SkillRow> skills;
    std::vector<SpecificRow> specific;
};

RunResult run(const ScenarioSpec& spec);

std::string format_summary(const RunResult& result);

inline constexpr std::string_view kCsvHeader = "t,I,phi,region,K,C,Y,w,R,labor_share,savings_rate";

/// Trajectory CSV plus `<path>.events.csv`.
void emit_csv(const Trajectory& traj, const std::filesystem::path& path);
/// Trajectory, events, extension tables and (optionally) an SVG plot into dir.
void write_outputs(const RunResult& result, const std::filesystem::path& dir);
/// Stacked factor incomes (wage bill below capital income) on a log scale.
std::string render_svg(const Trajectory& traj, const std::string& title);

}  // namespace taskecon
