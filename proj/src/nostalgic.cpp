#include <cmath>

#include "taskecon/analysis.hpp"
#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

namespace {

void check_cap(double lambda_g_cap) {
    if (!(lambda_g_cap > 0.0)) throw DomainError("automation cap rate must be positive");
}

bool binds(const TaskDistribution& dist, const AutomationPath& path, double lambda_g_cap, double t) {
    const double floor = share_at_time(dist, path, 0.0).unautomated * std::exp(-lambda_g_cap * t);
    return share_at_time(dist, path, t).unautomated < floor;
}

}  // namespace

AutomationShare nostalgic_share(const TaskDistribution& dist, const AutomationPath& path, double lambda_g_cap,
                                double t) {
    check_cap(lambda_g_cap);
    const auto phi = share_at_time(dist, path, t);
    if (std::isinf(lambda_g_cap)) return phi;
    const double floor = share_at_time(dist, path, 0.0).unautomated * std::exp(-lambda_g_cap * t);
    if (phi.unautomated >= floor) return phi;
    return AutomationShare::from_unautomated(floor);
}

std::vector<AutomationShare> nostalgic_cap_path(const TaskDistribution& dist, const AutomationPath& path,
                                                double lambda_g_cap, std::span<const double> times) {
    std::vector<AutomationShare> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(nostalgic_share(dist, path, lambda_g_cap, t));
    return out;
}

std::optional<double> nostalgic_bind_time(const TaskDistribution& dist, const AutomationPath& path,
                                          double lambda_g_cap, double t_max) {
    check_cap(lambda_g_cap);
    if (std::isinf(lambda_g_cap)) return std::nullopt;
    const double step = 0.01;
    double prev = 0.0;
    for (double t = step; t <= t_max + 0.5 * step; t += step) {
        if (binds(dist, path, lambda_g_cap, t)) {
            double lo = prev, hi = t;
            for (int i = 0; i < 60; ++i) {
                const double mid = 0.5 * (lo + hi);
                (binds(dist, path, lambda_g_cap, mid) ? hi : lo) = mid;
            }
            return hi;
        }
        prev = t;
    }
    return std::nullopt;
}

NostalgicRun simulate_nostalgic(const TaskDistribution& dist, const AutomationPath& path,
                                const EconomyParams& params, const PreferenceParams& prefs, double lambda_g_cap,
                                const Policy& policy, const SolverSettings& settings, double K0) {
    check_cap(lambda_g_cap);
    auto capped_model = baseline_model(dist, path, params, prefs);
    if (!std::isinf(lambda_g_cap)) {
        capped_model.share = [dist, path, lambda_g_cap](double t) {
            return nostalgic_share(dist, path, lambda_g_cap, t);
        };
        capped_model.terminal_consumption_ratio = terminal_consumption_ratio(params, prefs, lambda_g_cap);
    }
    NostalgicRun run;
    run.capped = simulate_model(capped_model, prefs, policy, settings, K0);
    run.uncapped = simulate(dist, path, params, prefs, policy, settings, K0);
    run.output_gap.reserve(run.capped.points.size());
    for (std::size_t i = 0; i < run.capped.points.size(); ++i)
        run.output_gap.push_back(1.0 - run.capped.points[i].Y / run.uncapped.points[i].Y);
    run.bind_time = nostalgic_bind_time(dist, path, lambda_g_cap, settings.horizon);
    return run;
}

}  // namespace taskecon
