#include <cmath>
#include <limits>

#include "taskecon/analysis.hpp"
#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

void FixedFactorParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0,1]");
    if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("fixed factor quantity must be positive");
}

FixedFactorEquilibrium fixed_factor_equilibrium(const EconomyParams& params, const FixedFactorParams& ff, double K,
                                                double phi) {
    return fixed_factor_equilibrium(params, ff, K, AutomationShare::from_automated(phi));
}

FixedFactorEquilibrium fixed_factor_equilibrium(const EconomyParams& params, const FixedFactorParams& ff, double K,
                                                const AutomationShare& share) {
    ff.validate();
    if (ff.alpha == 1.0) return {static_equilibrium(params, K, share), 0.0};

    // The task composite without TFP; its marginal products carry over.
    EconomyParams unit = params;
    unit.A = 1.0;
    const auto comp = static_equilibrium(unit, K, share);
    FixedFactorEquilibrium out;
    out.eq = comp;
    const double scale = params.A * std::pow(comp.Y, ff.alpha - 1.0) * std::pow(ff.M, 1.0 - ff.alpha);
    out.eq.Y = scale * comp.Y;
    out.eq.w = ff.alpha * scale * comp.w;
    out.eq.R = ff.alpha * scale * comp.R;
    out.eq.labor_share = out.eq.Y > 0.0 ? out.eq.w * params.L / out.eq.Y : 0.0;
    out.Q = (1.0 - ff.alpha) * out.eq.Y / ff.M;
    return out;
}

double fixed_factor_steady_capital(const EconomyParams& params, const PreferenceParams& prefs,
                                   const FixedFactorParams& ff) {
    validate_calibration(params, prefs);
    ff.validate();
    if (ff.alpha == 1.0) return std::numeric_limits<double>::infinity();
    const double base = ff.alpha * params.A * std::pow(ff.M, 1.0 - ff.alpha) / (prefs.rho + prefs.delta);
    const double K = std::pow(base, 1.0 / (1.0 - ff.alpha)) - params.L;
    if (!(K > 0.0)) throw DomainError("no positive region-2 steady state: fixed factor too scarce");
    return K;
}

double fixed_factor_quantity_for(const EconomyParams& params, const PreferenceParams& prefs, double alpha,
                                 double K_target) {
    validate_calibration(params, prefs);
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
    if (!(K_target > 0.0)) throw DomainError("target capital must be positive");
    return (K_target + params.L) * std::pow((prefs.rho + prefs.delta) / (alpha * params.A), 1.0 / (1.0 - alpha));
}

EconomyModel fixed_factor_model(const TaskDistribution& dist, const AutomationPath& path,
                                const EconomyParams& params, const PreferenceParams& prefs,
                                const FixedFactorParams& ff) {
    auto m = baseline_model(dist, path, params, prefs);
    ff.validate();
    if (ff.alpha == 1.0) return m;
    m.production = [params, ff](double K, const AutomationShare& s) {
        return fixed_factor_equilibrium(params, ff, K, s).eq;
    };
    const double K_star = fixed_factor_steady_capital(params, prefs, ff);
    const auto steady = fixed_factor_equilibrium(params, ff, K_star, AutomationShare{1.0, 0.0});
    m.terminal_consumption_ratio = 1.0 - prefs.delta * K_star / steady.eq.Y;
    return m;
}

Trajectory simulate_fixed_factor(const TaskDistribution& dist, const AutomationPath& path,
                                 const EconomyParams& params, const PreferenceParams& prefs,
                                 const FixedFactorParams& ff, const Policy& policy, const SolverSettings& settings,
                                 double K0) {
    return simulate_model(fixed_factor_model(dist, path, params, prefs, ff), prefs, policy, settings, K0);
}

}  // namespace taskecon
