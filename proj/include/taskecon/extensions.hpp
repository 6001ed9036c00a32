#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "taskecon/dynamics.hpp"

namespace taskecon {

// --- Fixed factor -----------------------------------------------------------

/// Cobb-Douglas weight alpha on the task composite and quantity M of a factor
/// in fixed supply (land, energy, ...). alpha = 1 is the baseline model.
struct FixedFactorParams {
    double alpha = 0.9;
    double M = 1.0;

    void validate() const;
    bool operator==(const FixedFactorParams&) const = default;
};

struct FixedFactorEquilibrium {
    StaticEquilibrium eq;
    double Q = 0.0;  // return to the fixed factor
};

FixedFactorEquilibrium fixed_factor_equilibrium(const EconomyParams& params, const FixedFactorParams& ff, double K,
                                                const AutomationShare& share);
FixedFactorEquilibrium fixed_factor_equilibrium(const EconomyParams& params, const FixedFactorParams& ff, double K,
                                                double phi);

/// Region-2 steady-state capital where w = R = rho + delta.
double fixed_factor_steady_capital(const EconomyParams& params, const PreferenceParams& prefs,
                                   const FixedFactorParams& ff);

/// Fixed-factor quantity that places the region-2 steady state at K_target.
double fixed_factor_quantity_for(const EconomyParams& params, const PreferenceParams& prefs, double alpha,
                                 double K_target);

EconomyModel fixed_factor_model(const TaskDistribution& dist, const AutomationPath& path,
                                const EconomyParams& params, const PreferenceParams& prefs,
                                const FixedFactorParams& ff);

Trajectory simulate_fixed_factor(const TaskDistribution& dist, const AutomationPath& path,
                                 const EconomyParams& params, const PreferenceParams& prefs,
                                 const FixedFactorParams& ff, const Policy& policy, const SolverSettings& settings,
                                 double K0);

// --- Automated R&D ----------------------------------------------------------

struct SingularityCheck {
    double ratio = 0.0;
    bool triggered = false;
};

/// Gamma / ((1 - Phi)(1 - theta)) and whether it strictly exceeds one.
SingularityCheck singularity_condition(double phi, double gamma, double theta);

/// Two-sector economy with unit task elasticity: final goods use capital
/// share c of K and labor L_Y under automation Phi; ideas use the rest of K
/// and labor L_A under R&D automation Gamma with spillover exponent theta.
struct RndParams {
    double theta = 0.3;
    TaskDistribution gamma = TaskDistribution(Pareto{0.01});  // over the same automation index as Phi
    double s = 0.3;
    double c = 0.9;
    double L_A = 1.0;
    double L_Y = 1.0;
    double A0 = 0.5;
    double growth_cap = 10.0;  // output growth per year treated as a blow-up
    /// Hold (Phi, Gamma) fixed instead of following the automation path.
    std::optional<std::pair<double, double>> frozen;

    void validate() const;
};

struct TwoSectorRun {
    Trajectory trajectory;  // R and w are the final-goods marginal products
    std::vector<double> tech;
    std::vector<double> tech_growth;
    std::vector<double> gamma;
    std::optional<double> blowup_time;
};

TwoSectorRun simulate_two_sector(const RndParams& rnd, const TaskDistribution& phi_dist, const AutomationPath& path,
                                 const SolverSettings& settings, double K0);

// --- Nostalgic jobs ---------------------------------------------------------

/// Automation cap: the unautomated share may not fall faster than rate
/// lambda_g_cap from its initial value. Psi = min(Phi, cap).
AutomationShare nostalgic_share(const TaskDistribution& dist, const AutomationPath& path, double lambda_g_cap,
                                double t);

std::vector<AutomationShare> nostalgic_cap_path(const TaskDistribution& dist, const AutomationPath& path,
                                                double lambda_g_cap, std::span<const double> times);

/// First time the cap is strictly below Phi; nullopt if it never binds before t_max.
std::optional<double> nostalgic_bind_time(const TaskDistribution& dist, const AutomationPath& path,
                                          double lambda_g_cap, double t_max);

struct NostalgicRun {
    Trajectory capped;
    Trajectory uncapped;
    std::vector<double> output_gap;  // 1 - Y_capped / Y_uncapped on the recording grid
    std::optional<double> bind_time;
};

NostalgicRun simulate_nostalgic(const TaskDistribution& dist, const AutomationPath& path,
                                const EconomyParams& params, const PreferenceParams& prefs, double lambda_g_cap,
                                const Policy& policy, const SolverSettings& settings, double K0);

// --- Heterogeneous skills ---------------------------------------------------

struct SkillWages {
    double substituted = 0.0;  // share of workers whose skills are automated
    double w_low = 0.0;
    double w_high = 0.0;
    double R = 0.0;
    double Y = 0.0;
};

/// Workers with skill below the automation frontier compete with machines;
/// the rest share the remaining unautomated tasks.
SkillWages skill_wages(const EconomyParams& params, const TaskDistribution& skills, double K,
                       const AutomationShare& share, double log_I);

// --- Task-specific capital --------------------------------------------------

struct SpecificCapitalState {
    double K = 0.0;
    double L = 1.0;
    double phi_minus = 0.0;   // share automated before the jump
    double delta_mass = 0.0;  // newly automated mass
    double k_spec = 0.0;      // specific capital per newly automated task
};

struct SpecificCapitalThresholds {
    double k1 = 0.0;
    double k2 = 0.0;
};

SpecificCapitalThresholds specific_capital_thresholds(const SpecificCapitalState& state);

struct SpecificCapitalReturns {
    double Y = 0.0;
    double w = 0.0;
    double R_traditional = 0.0;
    double R_specific = 0.0;
    int phase = 1;
};

SpecificCapitalReturns specific_capital_returns(const EconomyParams& params, const SpecificCapitalState& state);

}  // namespace taskecon
