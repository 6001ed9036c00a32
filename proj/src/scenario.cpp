#include "taskecon/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "taskecon/errors.hpp"

namespace taskecon {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view value) {
    const std::string text(value);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("invalid value for " + std::string(key) + ": '" + text + "' is not a number");
    }
    if (used != text.size())
        throw ConfigError("invalid value for " + std::string(key) + ": '" + text + "' is not a number");
    return v;
}

int parse_int(std::string_view key, std::string_view value) {
    const double v = parse_number(key, value);
    if (v != std::floor(v) || v < 1 || v > 1e9)
        throw ConfigError("invalid value for " + std::string(key) + ": expected a positive integer");
    return static_cast<int>(v);
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("invalid value for " + std::string(key) + ": expected true or false");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using Setter = std::function<void(ScenarioSpec&, std::string_view key, std::string_view value)>;

Setter number(double ScenarioSpec::*field) {
    return [field](ScenarioSpec& s, std::string_view k, std::string_view v) { s.*field = parse_number(k, v); };
}

template <class Sub>
Setter sub_number(Sub ScenarioSpec::*part, double Sub::*field) {
    return [part, field](ScenarioSpec& s, std::string_view k, std::string_view v) {
        (s.*part).*field = parse_number(k, v);
    };
}

template <class Sub>
Setter optional_number(std::optional<Sub> ScenarioSpec::*part, double Sub::*field) {
    return [part, field](ScenarioSpec& s, std::string_view k, std::string_view v) {
        if (!(s.*part)) (s.*part).emplace();
        (*(s.*part)).*field = parse_number(k, v);
    };
}

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"distribution.family",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) {
             if (v != "pareto" && v != "power" && v != "mixture")
                 throw ConfigError("invalid value for " + std::string(k) + ": expected pareto, power or mixture");
             s.distribution.family = std::string(v);
         }},
        {"distribution.lambda_g", sub_number(&ScenarioSpec::distribution, &DistributionSpec::lambda_g)},
        {"distribution.T", sub_number(&ScenarioSpec::distribution, &DistributionSpec::T)},
        {"distribution.beta", sub_number(&ScenarioSpec::distribution, &DistributionSpec::beta)},
        {"distribution.omega", sub_number(&ScenarioSpec::distribution, &DistributionSpec::omega)},
        {"economy.A", sub_number(&ScenarioSpec::economy, &EconomyParams::A)},
        {"economy.sigma", sub_number(&ScenarioSpec::economy, &EconomyParams::sigma)},
        {"economy.L", sub_number(&ScenarioSpec::economy, &EconomyParams::L)},
        {"preferences.rho", sub_number(&ScenarioSpec::preferences, &PreferenceParams::rho)},
        {"preferences.eta", sub_number(&ScenarioSpec::preferences, &PreferenceParams::eta)},
        {"preferences.delta", sub_number(&ScenarioSpec::preferences, &PreferenceParams::delta)},
        {"initial.phi0", number(&ScenarioSpec::phi0)},
        {"initial.K0", number(&ScenarioSpec::K0)},
        {"policy",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) {
             if (v == "ramsey")
                 s.policy = PolicyKind::Ramsey;
             else if (v == "constant_savings")
                 s.policy = PolicyKind::ConstantSavings;
             else
                 throw ConfigError("invalid value for " + std::string(k) + ": expected ramsey or constant_savings");
         }},
        {"savings_rate",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) { s.savings_rate = parse_number(k, v); }},
        {"solver.dt", sub_number(&ScenarioSpec::solver, &SolverSettings::dt)},
        {"solver.horizon", sub_number(&ScenarioSpec::solver, &SolverSettings::horizon)},
        {"solver.shoot_tol", sub_number(&ScenarioSpec::solver, &SolverSettings::shoot_tol)},
        {"solver.max_iter",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) { s.solver.max_shoot_iter = parse_int(k, v); }},
        {"extension.fixed_factor.alpha", optional_number(&ScenarioSpec::fixed_factor, &FixedFactorParams::alpha)},
        {"extension.fixed_factor.M", optional_number(&ScenarioSpec::fixed_factor, &FixedFactorParams::M)},
        {"extension.nostalgic.lambda_g_cap",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) { s.nostalgic_cap = parse_number(k, v); }},
        {"extension.rnd.theta", optional_number(&ScenarioSpec::rnd, &RndSpec::theta)},
        {"extension.rnd.gamma_lambda_g", optional_number(&ScenarioSpec::rnd, &RndSpec::gamma_lambda_g)},
        {"extension.rnd.s", optional_number(&ScenarioSpec::rnd, &RndSpec::s)},
        {"extension.rnd.c", optional_number(&ScenarioSpec::rnd, &RndSpec::c)},
        {"extension.skills.upsilon_lambda",
         [](ScenarioSpec& s, std::string_view k, std::string_view v) {
             s.skills_upsilon_lambda = parse_number(k, v);
         }},
        {"extension.specific.delta_mass", optional_number(&ScenarioSpec::specific, &SpecificSpec::delta_mass)},
        {"extension.specific.k_spec_max", optional_number(&ScenarioSpec::specific, &SpecificSpec::k_spec_max)},
        {"output.stride", sub_number(&ScenarioSpec::solver, &SolverSettings::record_stride)},
        {"output.svg", [](ScenarioSpec& s, std::string_view k, std::string_view v) { s.svg = parse_bool(k, v); }},
    };
    return table;
}

}  // namespace

void ScenarioSpec::validate() const {
    validate_calibration(economy, preferences);
    solver.validate();
    if (!(phi0 > 0.0 && phi0 < 1.0)) throw DomainError("initial.phi0 must lie in (0,1)");
    if (!(K0 > 0.0) || !std::isfinite(K0)) throw DomainError("initial.K0 must be positive");
    if (savings_rate && !(*savings_rate > 0.0 && *savings_rate < 1.0))
        throw DomainError("savings_rate must lie in (0,1)");
    if (fixed_factor) fixed_factor->validate();
    if (nostalgic_cap && !(*nostalgic_cap > 0.0)) throw DomainError("extension.nostalgic.lambda_g_cap must be positive");
    if (skills_upsilon_lambda && !(*skills_upsilon_lambda > 0.0))
        throw DomainError("extension.skills.upsilon_lambda must be positive");
    if (specific && !(specific->k_spec_max > 0.0)) throw DomainError("extension.specific.k_spec_max must be positive");
    if (rnd && !(rnd->gamma_lambda_g > 0.0)) throw DomainError("extension.rnd.gamma_lambda_g must be positive");
    const int simulators = int(fixed_factor.has_value()) + int(nostalgic_cap.has_value()) + int(rnd.has_value());
    if (simulators > 1) throw DomainError("at most one of the fixed_factor, nostalgic and rnd extensions may be set");
    automation();
}

CalibratedAutomation ScenarioSpec::automation() const {
    const auto& d = distribution;
    if (d.family == "pareto") return calibrate_pareto(phi0, d.lambda_g);
    if (d.family == "power") return calibrate_power(phi0, d.T, d.beta);
    if (d.family == "mixture") return calibrate_mixture(phi0, d.omega, d.lambda_g, d.T, d.beta);
    throw DomainError("unknown distribution family '" + d.family + "'");
}

Policy ScenarioSpec::make_policy() const {
    if (policy == PolicyKind::Ramsey) return RamseyPolicy{};
    return ConstantSavings{savings_rate.value_or(long_run_savings(preferences, economy.A))};
}

std::vector<std::string> preset_names() { return {"business_as_usual", "baseline_agi", "aggressive_agi", "mixed"}; }

ScenarioSpec preset(std::string_view name) {
    ScenarioSpec s;
    s.name = std::string(name);
    if (name == "business_as_usual") {
        s.distribution.family = "pareto";
        s.distribution.lambda_g = 0.01;
        s.solver.horizon = 150.0;
    } else if (name == "baseline_agi") {
        s.distribution.family = "power";
        s.distribution.T = 20.0;
    } else if (name == "aggressive_agi") {
        s.distribution.family = "power";
        s.distribution.T = 5.0;
    } else if (name == "mixed") {
        s.distribution.family = "mixture";
        s.distribution.T = 5.0;
        s.distribution.lambda_g = 0.01;
    } else {
        throw ConfigError("unknown scenario '" + std::string(name) + "'");
    }
    return s;
}

void apply_setting(ScenarioSpec& spec, std::string_view key, std::string_view value) {
    if (key == "scenario") {
        spec = preset(value);
        return;
    }
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown key '" + std::string(key) + "'");
    it->second(spec, key, value);
}

ScenarioSpec parse_config(std::string_view text) {
    struct Entry {
        std::string key;
        std::string value;
        int line;
    };
    std::vector<Entry> entries;
    std::optional<Entry> scenario;
    bool has_family = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
        Entry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
        if (e.key.empty()) throw ConfigError("missing key before '='", line_no);
        if (e.value.empty()) throw ConfigError("missing value for " + e.key, line_no);
        if (e.key == "scenario") {
            if (scenario) throw ConfigError("scenario given twice", line_no);
            scenario = e;
            continue;
        }
        if (e.key == "distribution.family") has_family = true;
        entries.push_back(std::move(e));
    }
    if (!scenario && !has_family) throw ConfigError("scenario or full distribution spec required");

    ScenarioSpec spec;
    try {
        if (scenario) apply_setting(spec, scenario->key, scenario->value);
    } catch (const ConfigError& err) {
        throw ConfigError(err.what(), scenario->line);
    }
    for (const auto& e : entries) {
        try {
            apply_setting(spec, e.key, e.value);
        } catch (const ConfigError& err) {
            throw ConfigError(err.what(), e.line);
        }
    }
    try {
        spec.validate();
    } catch (const DomainError& err) {
        throw ConfigError(std::string("constraint violated: ") + err.what());
    }
    return spec;
}

ScenarioSpec load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const ScenarioSpec& s) {
    std::ostringstream os;
    auto put = [&os](const char* key, const std::string& value) { os << key << " = " << value << '\n'; };
    if (s.name != "custom") put("scenario", s.name);
    put("distribution.family", s.distribution.family);
    put("distribution.lambda_g", fmt(s.distribution.lambda_g));
    put("distribution.T", fmt(s.distribution.T));
    put("distribution.beta", fmt(s.distribution.beta));
    put("distribution.omega", fmt(s.distribution.omega));
    put("economy.A", fmt(s.economy.A));
    put("economy.sigma", fmt(s.economy.sigma));
    put("economy.L", fmt(s.economy.L));
    put("preferences.rho", fmt(s.preferences.rho));
    put("preferences.eta", fmt(s.preferences.eta));
    put("preferences.delta", fmt(s.preferences.delta));
    put("initial.phi0", fmt(s.phi0));
    put("initial.K0", fmt(s.K0));
    put("policy", s.policy == PolicyKind::Ramsey ? "ramsey" : "constant_savings");
    if (s.savings_rate) put("savings_rate", fmt(*s.savings_rate));
    put("solver.dt", fmt(s.solver.dt));
    put("solver.horizon", fmt(s.solver.horizon));
    put("solver.shoot_tol", fmt(s.solver.shoot_tol));
    put("solver.max_iter", std::to_string(s.solver.max_shoot_iter));
    put("output.stride", fmt(s.solver.record_stride));
    put("output.svg", s.svg ? "true" : "false");
    if (s.fixed_factor) {
        put("extension.fixed_factor.alpha", fmt(s.fixed_factor->alpha));
        put("extension.fixed_factor.M", fmt(s.fixed_factor->M));
    }
    if (s.nostalgic_cap) put("extension.nostalgic.lambda_g_cap", fmt(*s.nostalgic_cap));
    if (s.rnd) {
        put("extension.rnd.theta", fmt(s.rnd->theta));
        put("extension.rnd.gamma_lambda_g", fmt(s.rnd->gamma_lambda_g));
        put("extension.rnd.s", fmt(s.rnd->s));
        put("extension.rnd.c", fmt(s.rnd->c));
    }
    if (s.skills_upsilon_lambda) put("extension.skills.upsilon_lambda", fmt(*s.skills_upsilon_lambda));
    if (s.specific) {
        put("extension.specific.delta_mass", fmt(s.specific->delta_mass));
        put("extension.specific.k_spec_max", fmt(s.specific->k_spec_max));
    }
    return os.str();
}

RunSummary summarize(const Trajectory& traj) {
    RunSummary s;
    s.collapse_time = traj.event_time(EventKind::Region2Entry);
    s.reentry_time = traj.event_time(EventKind::Region1Reentry);
    s.full_automation_time = traj.event_time(EventKind::FullAutomation);
    s.peak_wage_time = traj.event_time(EventKind::WagePeak).value_or(0.0);
    if (traj.points.size() >= 2) {
        s.terminal_output_growth = tail_growth(traj, Series::Y);
        s.terminal_wage_growth = tail_growth(traj, Series::w);
    }
    return s;
}

RunResult run(const ScenarioSpec& spec) {
    spec.validate();
    const auto cal = spec.automation();
    const auto policy = spec.make_policy();
    RunResult out;
    out.spec = spec;

    if (spec.fixed_factor) {
        out.trajectory = simulate_fixed_factor(cal.dist, cal.path, spec.economy, spec.preferences, *spec.fixed_factor,
                                               policy, spec.solver, spec.K0);
    } else if (spec.nostalgic_cap) {
        auto nr = simulate_nostalgic(cal.dist, cal.path, spec.economy, spec.preferences, *spec.nostalgic_cap, policy,
                                     spec.solver, spec.K0);
        out.trajectory = std::move(nr.capped);
        out.uncapped = std::move(nr.uncapped);
        out.output_gap = std::move(nr.output_gap);
        out.bind_time = nr.bind_time;
    } else if (spec.rnd) {
        RndParams rnd;
        rnd.theta = spec.rnd->theta;
        rnd.gamma = TaskDistribution(Pareto{spec.rnd->gamma_lambda_g / cal.path.g()});
        rnd.s = spec.rnd->s;
        rnd.c = spec.rnd->c;
        rnd.A0 = spec.economy.A;
        auto two = simulate_two_sector(rnd, cal.dist, cal.path, spec.solver, spec.K0);
        out.trajectory = std::move(two.trajectory);
        out.tech = std::move(two.tech);
        out.tech_growth = std::move(two.tech_growth);
        out.blowup_time = two.blowup_time;
    } else {
        out.trajectory = simulate(cal.dist, cal.path, spec.economy, spec.preferences, policy, spec.solver, spec.K0);
    }

    if (cal.dist.is_pareto() && !spec.rnd && !spec.fixed_factor)
        out.regime = classify_long_run(cal.dist, cal.path, spec.economy, spec.preferences);
    out.summary = summarize(out.trajectory);

    if (spec.skills_upsilon_lambda) {
        const TaskDistribution skills(Pareto{*spec.skills_upsilon_lambda / cal.path.g()});
        for (const auto& p : out.trajectory.points)
            out.skills.push_back({p.t, skill_wages(spec.economy, skills, p.K, p.share(), cal.path.log_index(p.t))});
    }
    if (spec.specific) {
        SpecificCapitalState state{spec.K0, spec.economy.L, spec.phi0, spec.specific->delta_mass, 0.0};
        const int steps = 300;
        for (int i = 0; i <= steps; ++i) {
            state.k_spec = spec.specific->k_spec_max * i / steps;
            out.specific.push_back({state.k_spec, specific_capital_returns(spec.economy, state)});
        }
    }
    return out;
}

std::string format_summary(const RunResult& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string("none"); };
    os << "scenario: " << r.spec.name << '\n';
    os << "distribution: " << r.spec.distribution.family << '\n';
    os << "policy: " << (r.spec.policy == PolicyKind::Ramsey ? "ramsey" : "constant_savings") << '\n';
    os << "collapse_time: " << opt(r.summary.collapse_time) << '\n';
    os << "reentry_time: " << opt(r.summary.reentry_time) << '\n';
    os << "full_automation_time: " << opt(r.summary.full_automation_time) << '\n';
    os << "peak_wage_time: " << fmt(r.summary.peak_wage_time) << '\n';
    os << "terminal_output_growth: " << fmt(r.summary.terminal_output_growth) << '\n';
    os << "terminal_wage_growth: " << fmt(r.summary.terminal_wage_growth) << '\n';
    if (r.regime) {
        os << "regime: " << to_string(r.regime->regime) << '\n';
        os << "predicted_wage_growth: " << fmt(r.regime->asymptotic_wage_growth) << '\n';
        os << "predicted_labor_share: " << fmt(r.regime->asymptotic_labor_share) << '\n';
    }
    if (r.spec.nostalgic_cap) {
        os << "cap_bind_time: " << opt(r.bind_time) << '\n';
        os << "final_output_gap: " << (r.output_gap.empty() ? std::string("none") : fmt(r.output_gap.back())) << '\n';
    }
    if (r.spec.rnd) os << "blowup_time: " << opt(r.blowup_time) << '\n';
    return os.str();
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::string join(std::initializer_list<double> values) {
    std::string line;
    for (double v : values) {
        if (!line.empty()) line += ',';
        line += fmt(v);
    }
    return line;
}

}  // namespace

void emit_csv(const Trajectory& traj, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << kCsvHeader << '\n';
    for (const auto& p : traj.points) {
        out << fmt(p.t) << ',' << fmt(p.I) << ',' << fmt(p.phi) << ',' << static_cast<int>(p.region) << ','
            << join({p.K, p.C, p.Y, p.w, p.R, p.labor_share, p.savings_rate}) << '\n';
    }
    auto events = open_out(path.string() + ".events.csv");
    events << "kind,t\n";
    for (const auto& e : traj.events) events << to_string(e.kind) << ',' << fmt(e.t) << '\n';
}

void write_outputs(const RunResult& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    emit_csv(r.trajectory, dir / "trajectory.csv");
    if (r.uncapped) {
        emit_csv(*r.uncapped, dir / "uncapped.csv");
        auto out = open_out(dir / "output_gap.csv");
        out << "t,output_gap\n";
        for (std::size_t i = 0; i < r.output_gap.size(); ++i)
            out << join({r.trajectory.points[i].t, r.output_gap[i]}) << '\n';
    }
    if (!r.tech.empty()) {
        auto out = open_out(dir / "technology.csv");
        out << "t,A,growth_A\n";
        for (std::size_t i = 0; i < r.tech.size(); ++i)
            out << join({r.trajectory.points[i].t, r.tech[i], r.tech_growth[i]}) << '\n';
    }
    if (!r.skills.empty()) {
        auto out = open_out(dir / "skills.csv");
        out << "t,substituted,w_low,w_high\n";
        for (const auto& row : r.skills)
            out << join({row.t, row.wages.substituted, row.wages.w_low, row.wages.w_high}) << '\n';
    }
    if (!r.specific.empty()) {
        auto out = open_out(dir / "specific_capital.csv");
        out << "k_spec,w,R_traditional,R_specific,phase\n";
        for (const auto& row : r.specific)
            out << join({row.k_spec, row.returns.w, row.returns.R_traditional, row.returns.R_specific}) << ','
                << row.returns.phase << '\n';
    }
    if (r.spec.svg) {
        auto out = open_out(dir / "trajectory.svg");
        out << render_svg(r.trajectory, r.spec.name);
    }
}

std::string render_svg(const Trajectory& traj, const std::string& title) {
    const double width = 800, height = 420, left = 70, right = 20, top = 40, bottom = 50;
    std::vector<double> ts, wage, total;
    for (const auto& p : traj.points) {
        if (!(p.Y > 0.0) || !std::isfinite(p.Y)) continue;
        ts.push_back(p.t);
        wage.push_back(std::log10(std::max(p.labor_share * p.Y, 1e-300)));
        total.push_back(std::log10(p.Y));
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" << title
       << ": wage bill (green) and capital income (red), log10 scale</text>\n";
    if (ts.size() < 2) {
        os << "</svg>\n";
        return os.str();
    }
    double lo = *std::min_element(wage.begin(), wage.end());
    double hi = *std::max_element(total.begin(), total.end());
    lo = std::floor(std::min(lo, hi) - 0.1);
    hi = std::ceil(hi + 0.1);
    const double t0 = ts.front(), t1 = ts.back();
    auto X = [&](double t) { return left + (t - t0) / (t1 - t0) * (width - left - right); };
    auto Y = [&](double v) { return height - bottom - (v - lo) / (hi - lo) * (height - top - bottom); };
    auto polygon = [&](const std::vector<double>& upper, const std::vector<double>* lower, const char* colour) {
        os << "<polygon fill=\"" << colour << "\" fill-opacity=\"0.6\" points=\"";
        for (std::size_t i = 0; i < ts.size(); ++i) os << X(ts[i]) << ',' << Y(upper[i]) << ' ';
        for (std::size_t i = ts.size(); i-- > 0;) os << X(ts[i]) << ',' << Y(lower ? (*lower)[i] : lo) << ' ';
        os << "\"/>\n";
    };
    polygon(total, &wage, "#d62728");
    polygon(wage, nullptr, "#2ca02c");
    os << "<line x1=\"" << left << "\" y1=\"" << Y(lo) << "\" x2=\"" << width - right << "\" y2=\"" << Y(lo)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << Y(lo) << "\" x2=\"" << left << "\" y2=\"" << Y(hi)
       << "\" stroke=\"black\"/>\n";
    for (double v = lo; v <= hi + 1e-9; v += 1.0)
        os << "<text x=\"" << left - 8 << "\" y=\"" << Y(v) + 4 << "\" font-size=\"11\" text-anchor=\"end\">1e"
           << static_cast<int>(v) << "</text>\n";
    os << "<text x=\"" << left << "\" y=\"" << height - 18 << "\" font-size=\"11\">t = " << t0 << "</text>\n";
    os << "<text x=\"" << width - right << "\" y=\"" << height - 18 << "\" font-size=\"11\" text-anchor=\"end\">t = "
       << t1 << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace taskecon
