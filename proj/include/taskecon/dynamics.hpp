#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taskecon/distributions.hpp"
#include "taskecon/static_economy.hpp"

namespace taskecon {

/// CRRA household: discount rate, inverse EIS, depreciation.
struct PreferenceParams {
    double rho = 0.04;
    double eta = 2.0;
    double delta = 0.1;

    void validate() const;
    bool operator==(const PreferenceParams&) const = default;
};

/// Throws unless A > rho + delta (positive growth once labor is abundant).
void validate_calibration(const EconomyParams& params, const PreferenceParams& prefs);

enum class Integrator { RK4, Euler };

struct SolverSettings {
    double dt = 0.01;
    double horizon = 100.0;
    double shoot_tol = 1e-10;  // terminal |C/Y - target| accepted without further bisection
    int max_shoot_iter = 200;
    Integrator integrator = Integrator::RK4;
    double record_stride = 0.1;
    // Ramsey shooting is done over overlapping windows; the first half of each
    // window is kept. The last window ends terminal_pad years past the horizon.
    double shoot_window = 100.0;
    double terminal_pad = 50.0;

    void validate() const;
    bool operator==(const SolverSettings&) const = default;
};

struct TrajectoryPoint {
    double t = 0.0;
    double I = 1.0;
    double phi = 0.0;
    double unautomated = 1.0;
    Region region = Region::One;
    double K = 0.0;
    double C = 0.0;
    double Y = 0.0;
    double w = 0.0;
    double R = 0.0;
    double labor_share = 0.0;
    double savings_rate = 0.0;

    AutomationShare share() const { return {phi, unautomated}; }
};

enum class EventKind { Region2Entry, Region1Reentry, FullAutomation, WagePeak };

std::string to_string(EventKind kind);

struct Event {
    EventKind kind;
    double t;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    std::vector<Event> events;

    std::optional<double> event_time(EventKind kind) const;
    /// Point whose time is closest to t.
    const TrajectoryPoint& at(double t) const;
};

struct RamseyPolicy {};
struct ConstantSavings {
    double s = 0.56;
};
using Policy = std::variant<RamseyPolicy, ConstantSavings>;

/// Generic economy driven by an exogenous automation share path; used by the
/// baseline model and by the extensions that swap the production side.
struct EconomyModel {
    std::function<AutomationShare(double t)> share;
    std::function<double(double t)> log_index;
    std::function<StaticEquilibrium(double K, const AutomationShare& share)> production;
    double labor = 1.0;
    /// C/Y the Ramsey path approaches at the end of the shooting horizon.
    double terminal_consumption_ratio = 0.5;
};

Trajectory simulate_model(const EconomyModel& model, const PreferenceParams& prefs, const Policy& policy,
                          const SolverSettings& settings, double K0);

// --- Baseline model ---------------------------------------------------------

/// (F_K - rho - delta) / eta at (K, Phi). C is accepted for interface symmetry;
/// the CRRA Euler equation does not depend on it.
double consumption_growth(const EconomyParams& params, const PreferenceParams& prefs, double K,
                          const AutomationShare& share, double C = 1.0);

/// Region-2 balanced growth rate (A - rho - delta) / eta.
double bgp_growth(const PreferenceParams& prefs, double A);

/// Long-run savings rate (A - rho - delta + eta delta) / (A eta).
double long_run_savings(const PreferenceParams& prefs, double A);

/// Capital at which F_K = rho + delta; infinite at full automation.
double capital_upper_bound(const EconomyParams& params, const PreferenceParams& prefs,
                           const AutomationShare& share);
double capital_upper_bound(const EconomyParams& params, const PreferenceParams& prefs, double phi);

EconomyModel baseline_model(const TaskDistribution& dist, const AutomationPath& path, const EconomyParams& params,
                            const PreferenceParams& prefs);

Trajectory simulate(const TaskDistribution& dist, const AutomationPath& path, const EconomyParams& params,
                    const PreferenceParams& prefs, const Policy& policy, const SolverSettings& settings, double K0);

/// Fixed-capital lower bound and K+ upper bound paths on the recording grid.
std::pair<Trajectory, Trajectory> bounds(const TaskDistribution& dist, const AutomationPath& path,
                                         const EconomyParams& params, const PreferenceParams& prefs,
                                         const SolverSettings& settings, double K0);

/// Savings rate at which capital deepening exactly offsets automation's
/// effect on the wage. Derived for delta = 0 and refused otherwise.
double balancing_savings(const EconomyParams& params, const PreferenceParams& prefs, const TrajectoryPoint& state,
                         const TaskDistribution& dist, const AutomationPath& path);

struct WageGrowthTerms {
    double capital = 0.0;
    double productivity = 0.0;
    double displacement = 0.0;

    double total() const { return capital + productivity + displacement; }
};

/// Splits log wage growth between two consecutive region-1 points.
WageGrowthTerms wage_growth_decomposition(const EconomyParams& params, const TrajectoryPoint& p1,
                                          const TrajectoryPoint& p2);

}  // namespace taskecon
