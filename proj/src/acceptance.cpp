#include "taskecon/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "taskecon/analysis.hpp"
#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"
#include "taskecon/kernels.hpp"
#include "taskecon/scenario.hpp"

namespace taskecon {

namespace {

struct Context {
    EconomyParams econ;
    PreferenceParams prefs;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string("none"); }

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

Trajectory run_preset(const Context& ctx, const std::string& name) {
    auto spec = preset(name);
    spec.economy = ctx.econ;
    spec.preferences = ctx.prefs;
    return run(spec).trajectory;
}

CheckResult calibration(const Context& ctx) {
    const auto eq = static_equilibrium(ctx.econ, 4.6, 0.608);
    const bool pass = within(eq.labor_share, 0.66, 0.01);
    return {1, "calibration", "initial labor share", pass, "labor share " + num(eq.labor_share) + ", expected 0.66 +- 0.01"};
}

CheckResult business_as_usual(const Context& ctx) {
    const auto traj = run_preset(ctx, "business_as_usual");
    const double gY = tail_growth(traj, Series::Y);
    const double gw = tail_growth(traj, Series::w);
    const auto report = classify_long_run(ctx.econ, ctx.prefs, 0.01);
    const bool pass = within(gY, 0.02, 0.002) && within(gw, 0.02, 0.002) &&
                      report.regime == Regime::AutomationConstrained && report.asymptotic_wage_growth == 0.02;
    return {2, "bau", "business-as-usual terminal growth", pass,
            "output growth " + num(gY) + ", wage growth " + num(gw) + " (expected 0.02 +- 0.002); regime " +
                to_string(report.regime) + ", predicted " + num(report.asymptotic_wage_growth)};
}

CheckResult baseline_agi(const Context& ctx) {
    const auto traj = run_preset(ctx, "baseline_agi");
    const auto collapse = traj.event_time(EventKind::Region2Entry);
    const double gY = tail_growth(traj, Series::Y);
    bool pinned = true;
    for (const auto& p : traj.points)
        if (p.t >= 20.0 && p.w != ctx.econ.A) pinned = false;
    const double target = bgp_growth(ctx.prefs, ctx.econ.A);
    const bool pass = collapse && *collapse < 20.0 && within(gY, 0.18, 0.005) && pinned;
    return {3, "agi", "baseline AGI collapse and take-off", pass,
            "collapse at " + opt(collapse) + " (expected < 20), output growth " + num(gY) + " (expected 0.18 +- 0.005, model " +
                num(target) + "), w = A for t >= 20: " + (pinned ? "yes" : "no")};
}

CheckResult aggressive_agi(const Context& ctx) {
    const auto traj = run_preset(ctx, "aggressive_agi");
    const auto entry = traj.event_time(EventKind::Region2Entry);
    const bool pass = entry && within(*entry, 3.0, 1.0);
    return {4, "aggressive", "aggressive AGI region-2 entry", pass, "entry at " + opt(entry) + ", expected 3 +- 1"};
}

CheckResult mixed(const Context& ctx) {
    const auto traj = run_preset(ctx, "mixed");
    const auto entry = traj.event_time(EventKind::Region2Entry);
    const auto back = traj.event_time(EventKind::Region1Reentry);
    bool resumes = false;
    if (back) {
        const double w_back = traj.at(*back + 1.0).w;
        resumes = traj.points.back().w > w_back && tail_growth(traj, Series::w) > 0.0;
    }
    const bool pass = entry && *entry < 5.0 && back && within(*back, 9.0, 2.0) && resumes;
    return {5, "mixed", "mixed scenario collapse and recovery", pass,
            "entry at " + opt(entry) + " (expected < 5), re-entry at " + opt(back) + " (expected 9 +- 2), wages resume: " +
                (resumes ? "yes" : "no")};
}

CheckResult growth_curve(const Context& ctx) {
    const auto [lg_star, g_star] = wage_max_rate(ctx.econ, ctx.prefs);
    std::vector<double> grid;
    for (int i = 1; i <= 360; ++i) grid.push_back(0.001 * i);
    const auto curve = wage_growth_curve(ctx.econ, ctx.prefs, grid);
    const auto best = std::max_element(curve.begin(), curve.end(),
                                       [](const CurvePoint& a, const CurvePoint& b) { return a.growth < b.growth; });
    bool peak_ok = within(lg_star, 0.09, 1e-12) && within(g_star, 0.18, 1e-12) &&
                   within(best->lambda_g, lg_star, 0.001) && within(best->growth, g_star, 1e-12);
    std::string detail = "peak (" + num(lg_star) + ", " + num(g_star) + "), grid argmax " + num(best->lambda_g) + ";";
    const std::vector<double> rates = {0.01, 0.12, 0.20};
    const auto sims = parallel::map_indexed(rates.size(), [&](std::size_t i) {
        return simulated_wage_growth(ctx.econ, ctx.prefs, rates[i], 0.608, 4.6);
    });
    bool sims_ok = true;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const double pred = predicted_wage_growth(ctx.econ, ctx.prefs, rates[i]);
        const bool ok = pred == 0.0 ? std::abs(sims[i]) < 0.005 : std::abs(sims[i] - pred) <= 0.1 * std::abs(pred);
        sims_ok = sims_ok && ok;
        detail += " lg " + num(rates[i]) + ": simulated " + num(sims[i]) + " vs " + num(pred) + ";";
    }
    return {6, "curve", "wage growth vs automation rate", peak_ok && sims_ok, detail};
}

CheckResult case3_labor_share(const Context& ctx) {
    const auto cal = calibrate_pareto(0.608, 0.01);
    SolverSettings s;
    s.horizon = 300.0;
    s.record_stride = 1.0;
    const auto traj = simulate(cal.dist, cal.path, ctx.econ, ctx.prefs,
                               ConstantSavings{long_run_savings(ctx.prefs, ctx.econ.A)}, s, 4.6);
    const double target = labor_share_limit_case3(ctx.econ, ctx.prefs, 0.01);
    const double measured = traj.points.back().labor_share;
    return {7, "case3", "automation-constrained labor share", within(measured, target, 0.02),
            "labor share at 300y " + num(measured) + ", limit " + num(target) + " +- 0.02"};
}

CheckResult upper_bound(const Context& ctx) {
    const double closed = capital_upper_bound(ctx.econ, ctx.prefs, 0.608);
    const double target = ctx.prefs.rho + ctx.prefs.delta;
    double lo = 1e-6, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        (static_equilibrium(ctx.econ, mid, 0.608).R > target ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    const double rel = std::abs(closed - root) / root;
    return {8, "upper_bound", "capital upper bound", rel < 1e-6,
            "closed form " + num(closed) + ", bisection " + num(root) + ", relative gap " + num(rel)};
}

CheckResult containment(const Context& ctx) {
    const double tol = 1e-9;
    bool pass = true;
    std::string detail;
    for (const auto& name : preset_names()) {
        auto spec = preset(name);
        spec.economy = ctx.econ;
        spec.preferences = ctx.prefs;
        const auto cal = spec.automation();
        const auto traj = run(spec).trajectory;
        const auto [lower, upper] = bounds(cal.dist, cal.path, ctx.econ, ctx.prefs, spec.solver, spec.K0);
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.points.size(); ++i) {
            const auto& p = traj.points[i];
            const auto& lo = lower.points[i];
            const auto& hi = upper.points[i];
            for (auto [v, a, b] : {std::tuple{p.K, lo.K, hi.K}, std::tuple{p.w, lo.w, hi.w}, std::tuple{p.Y, lo.Y, hi.Y}}) {
                worst = std::min({worst, v - a + tol * std::max(1.0, std::abs(a)),
                                  std::isinf(b) ? 0.0 : b - v + tol * std::max(1.0, std::abs(b))});
            }
        }
        pass = pass && worst >= 0.0;
        detail += name + (worst >= 0.0 ? " contained; " : " violated by " + num(-worst) + "; ");
    }
    return {9, "bounds", "trajectories within capital/output/wage bounds", pass, detail};
}

CheckResult fixed_factor(const Context& ctx) {
    const auto cal = calibrate_pareto(0.608, 0.01);
    FixedFactorParams ff;
    ff.alpha = 0.9;
    ff.M = fixed_factor_quantity_for(ctx.econ, ctx.prefs, ff.alpha, 4.6);
    SolverSettings s;
    s.horizon = 100.0;
    const auto traj = simulate_fixed_factor(cal.dist, cal.path, ctx.econ, ctx.prefs, ff, RamseyPolicy{}, s, 4.6);
    const auto peak = traj.event_time(EventKind::WagePeak);
    const auto entry = traj.event_time(EventKind::Region2Entry);
    const bool pass = peak && within(*peak, 10.0, 2.0) && entry && within(*entry, 25.0, 3.0);
    return {10, "fixed_factor", "fixed factor wage peak and region-2 entry", pass,
            "M " + num(ff.M) + ": wage peak at " + opt(peak) + " (expected 10 +- 2), region-2 entry at " + opt(entry) +
                " (expected 25 +- 3)"};
}

CheckResult singularity(const Context& ctx) {
    const auto cal = calibrate_pareto(0.608, 0.01);
    RndParams rnd;
    rnd.theta = 0.2;
    rnd.A0 = ctx.econ.A;
    SolverSettings s;

    rnd.frozen = std::pair{0.7, 0.5};
    s.horizon = 50.0;
    const auto hot = simulate_two_sector(rnd, cal.dist, cal.path, s, 4.6);
    const auto hot_ratio = singularity_condition(0.7, 0.5, rnd.theta);
    bool increasing = hot.tech_growth.size() >= 21;
    for (std::size_t i = hot.tech_growth.size() - std::min<std::size_t>(20, hot.tech_growth.size());
         increasing && i < hot.tech_growth.size(); ++i)
        increasing = hot.tech_growth[i] > hot.tech_growth[i - 1];

    rnd.frozen = std::pair{0.3, 0.2};
    s.horizon = 100.0;
    const auto cold = simulate_two_sector(rnd, cal.dist, cal.path, s, 4.6);
    const auto cold_ratio = singularity_condition(0.3, 0.2, rnd.theta);

    const bool pass = hot_ratio.triggered && increasing && hot.blowup_time && *hot.blowup_time <= 50.0 &&
                      !cold_ratio.triggered && !cold.blowup_time;
    return {11, "singularity", "automated R&D blow-up", pass,
            "ratio " + num(hot_ratio.ratio) + ": blow-up at " + opt(hot.blowup_time) + ", growth of A increasing: " +
                (increasing ? "yes" : "no") + "; ratio " + num(cold_ratio.ratio) + ": blow-up " + opt(cold.blowup_time)};
}

CheckResult nostalgic(const Context& ctx) {
    const auto cal = calibrate_power(0.608, 20.0);
    SolverSettings s;
    s.horizon = 150.0;
    const double cap = wage_max_rate(ctx.econ, ctx.prefs).first;
    const auto run = simulate_nostalgic(cal.dist, cal.path, ctx.econ, ctx.prefs, cap, RamseyPolicy{}, s, 4.6);
    const auto& last = run.capped.points.back();
    const auto& decade = run.capped.at(last.t - 10.0);
    const double gw = (std::log(last.w) - std::log(decade.w)) / (last.t - decade.t);
    const double final_gap = run.output_gap.back();
    double early_gap = 1.0;
    double early_t = 0.0;
    if (run.bind_time) {
        for (std::size_t i = 0; i < run.capped.points.size(); ++i) {
            if (run.capped.points[i].t > *run.bind_time) {
                early_gap = run.output_gap[i];
                early_t = run.capped.points[i].t;
                break;
            }
        }
    }
    const bool pass = run.bind_time && within(gw, 0.18, 0.03) && final_gap > 0.5 && early_gap < 0.05 &&
                      early_t - *run.bind_time <= 2.0;
    return {12, "nostalgic", "automation cap keeps wages growing", pass,
            "cap binds at " + opt(run.bind_time) + "; capped wage growth over final decade " + num(gw) +
                " (expected 0.18 +- 0.03); output gap " + num(early_gap) + " at t = " + num(early_t) + " (expected < 0.05), " +
                num(final_gap) + " at horizon (expected > 0.5)"};
}

CheckResult specific_capital(const Context& ctx) {
    SpecificCapitalState st{4.6, ctx.econ.L, 0.608, 0.1, 0.0};
    const auto th = specific_capital_thresholds(st);
    auto at = [&](double k) {
        auto s = st;
        s.k_spec = k;
        return specific_capital_returns(ctx.econ, s);
    };
    struct Phase {
        double from, to;
        int id;
        int dw, dRt, dRs;  // expected signs
    };
    const std::vector<Phase> phases = {{0.02 * th.k1, 0.98 * th.k1, 1, -1, +1, -1},
                                       {1.02 * th.k1, 0.98 * th.k2, 2, +1, +1, -1},
                                       {1.02 * th.k2, 3.0 * th.k2, 3, +1, -1, -1}};
    auto sign = [](double d) { return d > 0.0 ? 1 : (d < 0.0 ? -1 : 0); };
    bool signs_ok = true;
    for (const auto& ph : phases) {
        const int n = 60;
        auto prev = at(ph.from);
        for (int i = 1; i <= n; ++i) {
            const auto cur = at(ph.from + (ph.to - ph.from) * i / n);
            signs_ok = signs_ok && cur.phase == ph.id && sign(cur.w - prev.w) == ph.dw &&
                       sign(cur.R_traditional - prev.R_traditional) == ph.dRt &&
                       sign(cur.R_specific - prev.R_specific) == ph.dRs;
            prev = cur;
        }
    }
    double jump = 0.0;
    for (double k : {th.k1, th.k2}) {
        const auto left = at(k * (1.0 - 1e-13));
        const auto right = at(k);
        jump = std::max({jump, std::abs(left.w - right.w), std::abs(left.R_traditional - right.R_traditional),
                         std::abs(left.R_specific - right.R_specific)});
    }
    return {13, "specific", "specific capital phases", signs_ok && jump < 1e-8,
            "k1 " + num(th.k1) + ", k2 " + num(th.k2) + "; sign pattern " + (signs_ok ? "matches" : "differs") +
                "; largest jump at thresholds " + num(jump)};
}

CheckResult oracle(const Context&) {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    struct Case {
        EconomyParams p;
        double K, phi;
    };
    std::vector<Case> cases;
    for (int i = 0; i < 100; ++i) {
        EconomyParams p;
        p.A = 0.2 + 1.8 * u(rng);
        p.sigma = 0.2 + 0.7 * u(rng);
        p.L = 0.5 + 1.5 * u(rng);
        const double K = std::exp(std::log(0.05) + u(rng) * std::log(400.0));
        const double phi = 0.02 + 0.96 * u(rng);
        cases.push_back({p, K, phi});
    }
    const auto errors = parallel::map_indexed(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        const auto a = static_equilibrium(c.p, c.K, c.phi);
        const auto b = oracle_equilibrium(c.p, c.K, AutomationShare::from_automated(c.phi), 1000);
        auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(x), 1e-300); };
        return std::max({rel(a.Y, b.Y), rel(a.w, b.w), rel(a.R, b.R)});
    });
    const double worst = *std::max_element(errors.begin(), errors.end());
    return {14, "oracle", "closed form vs allocation oracle", worst < 1e-3,
            "100 random configurations, worst relative error " + num(worst) + " (limit 1e-3)"};
}

CheckResult fpf_duality(const Context&) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<EconomyParams, std::pair<double, double>>> cases;
    for (int i = 0; i < 1000; ++i) {
        EconomyParams p;
        p.A = 0.2 + 1.8 * u(rng);
        p.sigma = 0.2 + 0.75 * u(rng);
        p.L = 0.5 + 1.5 * u(rng);
        const double phi = 0.01 + 0.98 * u(rng);
        const double K = p.L * phi / (1.0 - phi) * (1.0 + std::exp(std::log(1e-3) + u(rng) * std::log(1e5)));
        cases.push_back({p, {K, phi}});
    }
    const auto residuals = parallel::map_indexed(cases.size(), [&](std::size_t i) {
        const auto& [p, kp] = cases[i];
        const auto eq = static_equilibrium(p, kp.first, kp.second);
        if (eq.region != Region::One) return 1.0;
        const double e = 1.0 - p.sigma;
        const double cost =
            std::pow(kp.second * std::pow(eq.R, e) + (1.0 - kp.second) * std::pow(eq.w, e), 1.0 / e) / p.A;
        return std::abs(cost - 1.0);
    });
    const double worst = *std::max_element(residuals.begin(), residuals.end());
    return {15, "fpf", "factor price frontier duality", worst < 1e-10,
            "1000 region-1 equilibria, worst unit-cost residual " + num(worst) + " (limit 1e-10)"};
}

using Check = std::function<CheckResult(const Context&)>;

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> checks = {
        {"calibration", calibration},   {"bau", business_as_usual}, {"agi", baseline_agi},
        {"aggressive", aggressive_agi}, {"mixed", mixed},           {"curve", growth_curve},
        {"case3", case3_labor_share},   {"upper_bound", upper_bound}, {"bounds", containment},
        {"fixed_factor", fixed_factor}, {"singularity", singularity}, {"nostalgic", nostalgic},
        {"specific", specific_capital}, {"oracle", oracle},         {"fpf", fpf_duality},
    };
    return checks;
}

}  // namespace

std::vector<std::string> acceptance_tags() {
    std::vector<std::string> tags;
    for (const auto& [tag, fn] : registry()) tags.push_back(tag);
    return tags;
}

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts) {
    const Context ctx{opts.economy, opts.preferences};
    std::vector<const Check*> selected;
    std::vector<std::string> tags;
    for (const auto& [tag, fn] : registry()) {
        if (opts.only.empty() || opts.only == tag) {
            selected.push_back(&fn);
            tags.push_back(tag);
        }
    }
    if (selected.empty()) throw ConfigError("unknown acceptance tag '" + opts.only + "'");
    return parallel::map_indexed(selected.size(), [&](std::size_t i) {
        try {
            return (*selected[i])(ctx);
        } catch (const std::exception& e) {
            return CheckResult{0, tags[i], "error", false, e.what()};
        }
    });
}

std::string format_check(const CheckResult& r) {
    char id[8];
    std::snprintf(id, sizeof id, "%02d", r.id);
    return std::string(r.pass ? "[PASS] " : "[FAIL] ") + id + " " + r.tag + ": " + r.title + " | " + r.detail;
}

}  // namespace taskecon
