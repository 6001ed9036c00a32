#include "taskecon/analysis.hpp"

#include <cmath>

#include "taskecon/errors.hpp"

namespace taskecon {

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::Collapse: return "Collapse";
        case Regime::CapitalConstrained: return "CapitalConstrained";
        case Regime::AutomationConstrained: return "AutomationConstrained";
    }
    return "unknown";
}

namespace {

struct Thresholds {
    double hi;
    double lo;
};

Thresholds thresholds(const EconomyParams& params, const PreferenceParams& prefs) {
    validate_calibration(params, prefs);
    const double hi = (params.A - prefs.rho - prefs.delta) / prefs.eta;
    return {hi, (1.0 - params.sigma) * hi};
}

void check_rate(double lambda_g) {
    if (!(lambda_g > 0.0) || !std::isfinite(lambda_g)) throw DomainError("lambda_g must be positive");
}

}  // namespace

RegimeReport classify_long_run(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g) {
    check_rate(lambda_g);
    const auto th = thresholds(params, prefs);
    RegimeReport r;
    r.lambda_g_hi = th.hi;
    r.lambda_g_lo = th.lo;
    if (lambda_g > th.hi) {
        r.regime = Regime::Collapse;
        r.asymptotic_wage_growth = 0.0;
        r.asymptotic_labor_share = 0.0;
    } else if (lambda_g > th.lo) {
        r.regime = Regime::CapitalConstrained;
        r.asymptotic_wage_growth = (th.hi - lambda_g) / params.sigma;
        r.asymptotic_labor_share = 1.0;
    } else {
        r.regime = Regime::AutomationConstrained;
        r.asymptotic_wage_growth = lambda_g / (1.0 - params.sigma);
        r.asymptotic_labor_share = labor_share_limit_case3(params, prefs, lambda_g);
    }
    return r;
}

RegimeReport classify_long_run(const TaskDistribution& dist, const AutomationPath& path,
                               const EconomyParams& params, const PreferenceParams& prefs) {
    const auto* p = std::get_if<Pareto>(&dist.family());
    if (p == nullptr) throw DomainError("long-run classification requires a Pareto task distribution");
    return classify_long_run(params, prefs, p->lambda * path.g());
}

double labor_share_limit_case3(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g) {
    check_rate(lambda_g);
    const auto th = thresholds(params, prefs);
    if (lambda_g > th.lo) throw DomainError("closed-form labor share holds only for lambda_g <= lambda_g_lo");
    const double sig = params.sigma;
    const double num = (params.A - prefs.rho - prefs.delta + prefs.eta * prefs.delta) / prefs.eta;
    const double den = lambda_g / (1.0 - sig) + prefs.delta;
    return 1.0 - std::pow(num / den, (sig - 1.0) / sig);
}

double predicted_wage_growth(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g) {
    return classify_long_run(params, prefs, lambda_g).asymptotic_wage_growth;
}

std::vector<CurvePoint> wage_growth_curve(const EconomyParams& params, const PreferenceParams& prefs,
                                          std::span<const double> lambda_g_grid) {
    const auto th = thresholds(params, prefs);
    std::vector<CurvePoint> out;
    out.reserve(lambda_g_grid.size());
    for (double lg : lambda_g_grid) {
        if (!(lg > 0.0 && lg <= 2.0 * th.hi)) throw DomainError("lambda_g grid must lie in (0, 2 lambda_g_hi]");
        out.push_back({lg, predicted_wage_growth(params, prefs, lg)});
    }
    return out;
}

std::pair<double, double> wage_max_rate(const EconomyParams& params, const PreferenceParams& prefs) {
    const auto th = thresholds(params, prefs);
    return {th.lo, th.hi};
}

OmegaDiagnostic omega(const EconomyParams& params, const TrajectoryPoint& point) {
    params.validate();
    if (point.region != Region::One) throw DomainError("omega is defined in region 1 only");
    if (point.unautomated == 0.0 || point.phi == 0.0) throw DomainError("omega requires 0 < Phi < 1");
    const double sig = params.sigma;
    const double log_om =
        (sig - 1.0) / sig * std::log(point.K) + (std::log(point.phi) - std::log(point.unautomated)) / sig;
    return {std::exp(log_om)};
}

std::optional<double> tail_automation_rate(const TaskDistribution& dist, const AutomationPath& path) {
    if (const auto* p = std::get_if<Pareto>(&dist.family())) return p->lambda * path.g();
    if (const auto* m = std::get_if<Mixture>(&dist.family())) {
        if (m->omega < 1.0) return m->pareto.lambda * path.g();
    }
    return std::nullopt;
}

double terminal_consumption_ratio(const EconomyParams& params, const PreferenceParams& prefs,
                                  std::optional<double> tail_rate) {
    const auto th = thresholds(params, prefs);
    if (!tail_rate || *tail_rate >= th.lo) return 1.0 - long_run_savings(prefs, params.A);
    const double sig = params.sigma;
    const double g = *tail_rate / (1.0 - sig);
    const double R = prefs.rho + prefs.delta + prefs.eta * g;
    const double k_over_y = std::pow(params.A, sig - 1.0) * std::pow(R, -sig);
    return 1.0 - (g + prefs.delta) * k_over_y;
}

double tail_growth(const Trajectory& traj, Series series, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("tail fraction must lie in (0,1]");
    if (traj.points.size() < 2) throw DomainError("trajectory too short for a growth estimate");
    const auto& last = traj.points.back();
    const double t0 = last.t - fraction * (last.t - traj.points.front().t);
    const auto& first = traj.at(t0);
    if (!(last.t > first.t)) throw DomainError("tail window is empty");
    auto value = [series](const TrajectoryPoint& p) {
        switch (series) {
            case Series::Y: return p.Y;
            case Series::w: return p.w;
            case Series::K: return p.K;
            case Series::C: return p.C;
        }
        return p.Y;
    };
    return (std::log(value(last)) - std::log(value(first))) / (last.t - first.t);
}

double simulated_wage_growth(const EconomyParams& params, const PreferenceParams& prefs, double lambda_g,
                             double phi0, double K0, double horizon, double dt) {
    const auto cal = calibrate_pareto(phi0, lambda_g);
    SolverSettings settings;
    settings.dt = dt;
    settings.horizon = horizon;
    settings.record_stride = 1.0;
    const auto traj = simulate(cal.dist, cal.path, params, prefs, ConstantSavings{long_run_savings(prefs, params.A)},
                               settings, K0);
    return tail_growth(traj, Series::w);
}

}  // namespace taskecon
