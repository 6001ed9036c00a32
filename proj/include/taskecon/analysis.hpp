#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taskecon/dynamics.hpp"

namespace taskecon {

enum class Regime { Collapse, CapitalConstrained, AutomationConstrained };

std::string to_string(Regime regime);

/// Long-run outcome of the race between automation and capital accumulation
/// under a Pareto task distribution.
struct RegimeReport {
    Regime regime = Regime::AutomationConstrained;
    double asymptotic_wage_growth = 0.0;
    double asymptotic_labor_share = 0.0;
    double lambda_g_hi = 0.0;  // (A - rho - delta) / eta
    double lambda_g_lo = 0.0;  // (1 - sigma) (A - rho - delta) / eta
};

RegimeReport classify_long_run(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g);
/// Same, for a calibrated distribution; throws for non-Pareto families.
RegimeReport classify_long_run(const TaskDistribution& dist, const AutomationPath& path,
                               const EconomyParams& params, const PreferenceParams& prefs);

double labor_share_limit_case3(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g);

/// Predicted asymptotic wage growth as a function of lambda_g (piecewise linear).
double predicted_wage_growth(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g);

struct CurvePoint {
    double lambda_g = 0.0;
    double growth = 0.0;
};

std::vector<CurvePoint> wage_growth_curve(const EconomyParams& params, const PreferenceParams& prefs,
                                          std::span<const double> lambda_g_grid);

/// (lambda_g*, g_w*) maximizing asymptotic wage growth.
std::pair<double, double> wage_max_rate(const EconomyParams& params, const PreferenceParams& prefs);

struct OmegaDiagnostic {
    double omega = 0.0;
};

/// K^((sigma-1)/sigma) (Phi / (1 - Phi))^(1/sigma) at a region-1 point.
OmegaDiagnostic omega(const EconomyParams& params, const TrajectoryPoint& point);

/// Rate at which the unautomated share decays in the tail; nullopt when the
/// distribution reaches full automation.
std::optional<double> tail_automation_rate(const TaskDistribution& dist, const AutomationPath& path);

/// Asymptotic C/Y of the Ramsey path given the tail rate of automation.
double terminal_consumption_ratio(const EconomyParams& params, const PreferenceParams& prefs,
                                  std::optional<double> tail_rate);

enum class Series { Y, w, K, C };

/// Mean log-derivative of a series over the final `fraction` of the trajectory.
double tail_growth(const Trajectory& traj, Series series, double fraction = 0.2);

/// Tail wage growth of a constant-savings (s = s_infinity) Pareto economy.
double simulated_wage_growth(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g,
                             double phi0, double K0, double horizon = 300.0, double dt = 0.01);

}  // namespace taskecon
