#include "taskecon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "taskecon/analysis.hpp"
#include "taskecon/errors.hpp"

namespace taskecon {

void PreferenceParams::validate() const {
    if (!std::isfinite(rho)) throw DomainError("rho must be finite");
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("eta must be positive");
    if (!(delta >= 0.0) || !std::isfinite(delta)) throw DomainError("delta must be non-negative");
}

void validate_calibration(const EconomyParams& params, const PreferenceParams& prefs) {
    params.validate();
    prefs.validate();
    if (!(params.A > prefs.rho + prefs.delta)) throw DomainError("calibration requires A > rho + delta");
}

void SolverSettings::validate() const {
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    if (!(horizon >= 1.0)) throw DomainError("horizon must be at least one year");
    if (!(shoot_tol > 0.0)) throw DomainError("shoot_tol must be positive");
    if (max_shoot_iter < 1) throw DomainError("max_shoot_iter must be positive");
    if (!(record_stride >= dt)) throw DomainError("recording stride must be at least dt");
    if (!(shoot_window >= 2.0 * dt)) throw DomainError("shooting window too short");
    if (!(terminal_pad >= 0.0)) throw DomainError("terminal pad must be non-negative");
}

std::string to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Region2Entry: return "region2_entry";
        case EventKind::Region1Reentry: return "region1_reentry";
        case EventKind::FullAutomation: return "full_automation";
        case EventKind::WagePeak: return "wage_peak";
    }
    return "unknown";
}

std::optional<double> Trajectory::event_time(EventKind kind) const {
    for (const auto& e : events)
        if (e.kind == kind) return e.t;
    return std::nullopt;
}

const TrajectoryPoint& Trajectory::at(double t) const {
    if (points.empty()) throw DomainError("empty trajectory");
    auto it = std::lower_bound(points.begin(), points.end(), t,
                               [](const TrajectoryPoint& p, double v) { return p.t < v; });
    if (it == points.end()) return points.back();
    if (it != points.begin() && std::abs(std::prev(it)->t - t) < std::abs(it->t - t)) return *std::prev(it);
    return *it;
}

namespace {

struct State {
    double K = 0.0;
    double C = 0.0;
};

TrajectoryPoint make_point(double t, double log_I, const AutomationShare& share, const StaticEquilibrium& eq,
                           double K, double C) {
    TrajectoryPoint p;
    p.t = t;
    p.I = std::exp(log_I);
    p.phi = share.automated;
    p.unautomated = share.unautomated;
    p.region = eq.region;
    p.K = K;
    p.C = C;
    p.Y = eq.Y;
    p.w = eq.w;
    p.R = eq.R;
    p.labor_share = eq.labor_share;
    p.savings_rate = eq.Y > 0.0 ? 1.0 - C / eq.Y : 0.0;
    return p;
}

class Engine {
public:
    Engine(const EconomyModel& m, const PreferenceParams& prefs, const Policy& policy, const SolverSettings& s)
        : m_(m), prefs_(prefs), settings_(s) {
        if (const auto* cs = std::get_if<ConstantSavings>(&policy)) {
            ramsey_ = false;
            s_ = cs->s;
            if (!(s_ > 0.0 && s_ < 1.0)) throw DomainError("constant savings rate must lie in (0,1)");
        }
    }

    Trajectory run(double K0) {
        if (!(K0 > 0.0) || !std::isfinite(K0)) throw DomainError("initial capital must be positive");
        const long n_total = std::lround(settings_.horizon / settings_.dt);
        std::vector<State> grid;
        grid.reserve(static_cast<std::size_t>(n_total) + 1);
        if (ramsey_)
            shoot_all(K0, n_total, grid);
        else
            integrate_constant(K0, n_total, grid);
        return assemble(grid);
    }

private:
    double time(long n) const { return static_cast<double>(n) * settings_.dt; }

    bool rhs(double t, const State& x, State& dx) const {
        if (!(x.K > 0.0) || !std::isfinite(x.K) || !std::isfinite(x.C)) return false;
        const auto eq = m_.production(x.K, m_.share(t));
        if (ramsey_) {
            dx.K = eq.Y - prefs_.delta * x.K - x.C;
            dx.C = x.C * (eq.R - prefs_.rho - prefs_.delta) / prefs_.eta;
        } else {
            dx.K = s_ * eq.Y - prefs_.delta * x.K;
            dx.C = 0.0;
        }
        return true;
    }

    bool step(double t, State& x) const {
        const double h = settings_.dt;
        State k1;
        if (!rhs(t, x, k1)) return false;
        if (settings_.integrator == Integrator::Euler) {
            x = {x.K + h * k1.K, x.C + h * k1.C};
            return x.K > 0.0;
        }
        State k2, k3, k4;
        if (!rhs(t + 0.5 * h, {x.K + 0.5 * h * k1.K, x.C + 0.5 * h * k1.C}, k2)) return false;
        if (!rhs(t + 0.5 * h, {x.K + 0.5 * h * k2.K, x.C + 0.5 * h * k2.C}, k3)) return false;
        if (!rhs(t + h, {x.K + h * k3.K, x.C + h * k3.C}, k4)) return false;
        x.K += h / 6.0 * (k1.K + 2.0 * k2.K + 2.0 * k3.K + k4.K);
        x.C += h / 6.0 * (k1.C + 2.0 * k2.C + 2.0 * k3.C + k4.C);
        return x.K > 0.0 && std::isfinite(x.K);
    }

    void integrate_constant(double K0, long n_total, std::vector<State>& grid) const {
        State x{K0, 0.0};
        grid.push_back(x);
        for (long n = 0; n < n_total; ++n) {
            if (!step(time(n), x)) {
                std::ostringstream os;
                os << "capital became non-positive at t = " << time(n + 1) << " under constant savings";
                throw SolverError(os.str());
            }
            grid.push_back(x);
        }
    }

    enum class Verdict { TooLow, TooHigh };

    struct Trial {
        Verdict verdict;
        double mismatch;
    };

    Trial trial(long n0, long n_end, double K, double C) const {
        State x{K, C};
        for (long n = n0; n < n_end; ++n)
            if (!step(time(n), x)) return {Verdict::TooHigh, std::numeric_limits<double>::infinity()};
        const auto eq = m_.production(x.K, m_.share(time(n_end)));
        const double mismatch = x.C / eq.Y - m_.terminal_consumption_ratio;
        return {mismatch > 0.0 ? Verdict::TooHigh : Verdict::TooLow, mismatch};
    }

    double shoot_window(long n0, long n_end, double K) const {
        const auto eq0 = m_.production(K, m_.share(time(n0)));
        double lo = 1e-9 * eq0.Y;
        double hi = eq0.Y + K;
        const auto t_lo = trial(n0, n_end, K, lo);
        const auto t_hi = trial(n0, n_end, K, hi);
        if (t_lo.verdict != Verdict::TooLow || t_hi.verdict != Verdict::TooHigh) {
            std::ostringstream os;
            os << "Ramsey shooting bracket [" << lo << ", " << hi << "] does not straddle the saddle path at t = "
               << time(n0);
            throw SolverError(os.str());
        }
        for (int it = 0; it < settings_.max_shoot_iter; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (!(mid > lo && mid < hi)) return lo;
            const auto t_mid = trial(n0, n_end, K, mid);
            if (std::abs(t_mid.mismatch) < settings_.shoot_tol) return mid;
            (t_mid.verdict == Verdict::TooLow ? lo : hi) = mid;
        }
        std::ostringstream os;
        os << "Ramsey shooting did not converge within " << settings_.max_shoot_iter
           << " iterations; last bracket for C at t = " << time(n0) << ": [" << lo << ", " << hi << "]";
        throw SolverError(os.str());
    }

    void shoot_all(double K0, long n_total, std::vector<State>& grid) const {
        const long n_window = std::max(2L, std::lround(settings_.shoot_window / settings_.dt));
        const long n_final = n_total + std::lround(settings_.terminal_pad / settings_.dt);
        long n0 = 0;
        double K = K0;
        grid.clear();
        while (true) {
            const long n_end = std::min(n0 + n_window, n_final);
            const bool last = n_end == n_final;
            const long n_keep = last ? n_total : std::min(n0 + n_window / 2, n_total);
            const double C = shoot_window(n0, n_end, K);
            State x{K, C};
            if (grid.empty())
                grid.push_back(x);
            else
                grid.back() = x;
            for (long n = n0; n < n_keep; ++n) {
                if (!step(time(n), x)) {
                    std::ostringstream os;
                    os << "capital became non-positive at t = " << time(n + 1) << " on the accepted Ramsey path";
                    throw SolverError(os.str());
                }
                grid.push_back(x);
            }
            if (n_keep >= n_total) break;
            n0 = n_keep;
            K = x.K;
        }
    }

    Trajectory assemble(const std::vector<State>& grid) const {
        Trajectory traj;
        const long stride = std::max(1L, std::lround(settings_.record_stride / settings_.dt));
        const long n_last = static_cast<long>(grid.size()) - 1;
        std::optional<Region> prev;
        bool seen_two = false;
        bool reentered = false;
        bool full = false;
        double best_w = -1.0;
        double best_t = 0.0;
        for (long n = 0; n <= n_last; ++n) {
            const double t = time(n);
            const auto share = m_.share(t);
            const auto& x = grid[static_cast<std::size_t>(n)];
            const auto eq = m_.production(x.K, share);
            const double C = ramsey_ ? x.C : (1.0 - s_) * eq.Y;
            if (eq.region == Region::Two && !seen_two) {
                traj.events.push_back({EventKind::Region2Entry, t});
                seen_two = true;
            }
            if (eq.region == Region::One && seen_two && !reentered && prev == Region::Two) {
                traj.events.push_back({EventKind::Region1Reentry, t});
                reentered = true;
            }
            if (share.full() && !full) {
                traj.events.push_back({EventKind::FullAutomation, t});
                full = true;
            }
            if (eq.w > best_w) {
                best_w = eq.w;
                best_t = t;
            }
            prev = eq.region;
            if (n % stride == 0 || n == n_last) traj.points.push_back(make_point(t, m_.log_index(t), share, eq, x.K, C));
        }
        traj.events.push_back({EventKind::WagePeak, best_t});
        std::stable_sort(traj.events.begin(), traj.events.end(),
                         [](const Event& a, const Event& b) { return a.t < b.t; });
        return traj;
    }

    const EconomyModel& m_;
    PreferenceParams prefs_;
    SolverSettings settings_;
    bool ramsey_ = true;
    double s_ = 0.0;
};

}  // namespace

Trajectory simulate_model(const EconomyModel& model, const PreferenceParams& prefs, const Policy& policy,
                          const SolverSettings& settings, double K0) {
    prefs.validate();
    settings.validate();
    return Engine(model, prefs, policy, settings).run(K0);
}

double consumption_growth(const EconomyParams& params, const PreferenceParams& prefs, double K,
                          const AutomationShare& share, double /*C*/) {
    prefs.validate();
    const auto eq = static_equilibrium(params, K, share);
    return (eq.R - prefs.rho - prefs.delta) / prefs.eta;
}

double bgp_growth(const PreferenceParams& prefs, double A) {
    prefs.validate();
    if (!(A > prefs.rho + prefs.delta) && A != prefs.rho + prefs.delta)
        throw DomainError("balanced growth requires A >= rho + delta");
    return (A - prefs.rho - prefs.delta) / prefs.eta;
}

double long_run_savings(const PreferenceParams& prefs, double A) {
    prefs.validate();
    if (!(A > 0.0)) throw DomainError("A must be positive");
    const double s = (A - prefs.rho - prefs.delta + prefs.eta * prefs.delta) / (A * prefs.eta);
    if (!(s > 0.0 && s < 1.0)) throw DomainError("long-run savings rate outside (0,1): invalid calibration");
    return s;
}

double capital_upper_bound(const EconomyParams& params, const PreferenceParams& prefs, double phi) {
    if (phi > 1.0) throw DomainError("automated share above one");
    return capital_upper_bound(params, prefs, AutomationShare::from_automated(phi));
}

double capital_upper_bound(const EconomyParams& params, const PreferenceParams& prefs,
                           const AutomationShare& share) {
    validate_calibration(params, prefs);
    if (share.full()) return std::numeric_limits<double>::infinity();
    if (share.none()) return 0.0;
    const double sig = params.sigma;
    const double R = prefs.rho + prefs.delta;
    const double base = std::pow(R, sig - 1.0) - std::pow(params.A, sig - 1.0) * share.automated;
    const double log_k = sig * std::log(params.A) + std::log(params.L) + std::log(share.unautomated) / (sig - 1.0) +
                         std::log(share.automated) - sig / (sig - 1.0) * std::log(base);
    return std::exp(log_k);
}

EconomyModel baseline_model(const TaskDistribution& dist, const AutomationPath& path, const EconomyParams& params,
                            const PreferenceParams& prefs) {
    validate_calibration(params, prefs);
    EconomyModel m;
    m.share = [dist, path](double t) { return share_at_time(dist, path, t); };
    m.log_index = [path](double t) { return path.log_index(t); };
    m.production = [params](double K, const AutomationShare& s) { return static_equilibrium(params, K, s); };
    m.labor = params.L;
    m.terminal_consumption_ratio = terminal_consumption_ratio(params, prefs, tail_automation_rate(dist, path));
    return m;
}

Trajectory simulate(const TaskDistribution& dist, const AutomationPath& path, const EconomyParams& params,
                    const PreferenceParams& prefs, const Policy& policy, const SolverSettings& settings, double K0) {
    return simulate_model(baseline_model(dist, path, params, prefs), prefs, policy, settings, K0);
}

std::pair<Trajectory, Trajectory> bounds(const TaskDistribution& dist, const AutomationPath& path,
                                         const EconomyParams& params, const PreferenceParams& prefs,
                                         const SolverSettings& settings, double K0) {
    validate_calibration(params, prefs);
    settings.validate();
    const auto share0 = share_at_time(dist, path, 0.0);
    const auto eq0 = static_equilibrium(params, K0, share0);
    if (eq0.R < prefs.rho + prefs.delta)
        throw DomainError("bounds require F_K(K0, Phi0) >= rho + delta (no past over-accumulation)");

    Trajectory lower, upper;
    const long n_total = std::lround(settings.horizon / settings.dt);
    const long stride = std::max(1L, std::lround(settings.record_stride / settings.dt));
    for (long n = 0; n <= n_total; ++n) {
        if (n % stride != 0 && n != n_total) continue;
        const double t = static_cast<double>(n) * settings.dt;
        const auto share = share_at_time(dist, path, t);
        const double log_I = path.log_index(t);
        lower.points.push_back(make_point(t, log_I, share, static_equilibrium(params, K0, share), K0, 0.0));
        const double K_hi = capital_upper_bound(params, prefs, share);
        if (std::isinf(K_hi)) {
            StaticEquilibrium eq;
            eq.region = Region::Two;
            eq.Y = K_hi;
            eq.w = params.A;
            eq.R = params.A;
            eq.labor_share = 0.0;
            upper.points.push_back(make_point(t, log_I, share, eq, K_hi, 0.0));
        } else {
            upper.points.push_back(make_point(t, log_I, share, static_equilibrium(params, K_hi, share), K_hi, 0.0));
        }
    }
    return {std::move(lower), std::move(upper)};
}

double balancing_savings(const EconomyParams& params, const PreferenceParams& prefs, const TrajectoryPoint& state,
                         const TaskDistribution& dist, const AutomationPath& path) {
    params.validate();
    if (prefs.delta != 0.0) throw DomainError("balancing savings rate is derived for delta = 0 only");
    if (state.region != Region::One || state.unautomated == 0.0 || state.phi == 0.0)
        throw DomainError("balancing savings rate requires an interior region-1 state");
    const double sig = params.sigma;
    const double kap = state.phi / state.unautomated;
    const double k = state.K / state.phi;
    const double ell = params.L / state.unautomated;
    const double bracket = (kap + 1.0 / (1.0 - sig)) - sig / (1.0 - sig) * std::pow(k / ell, (1.0 - sig) / sig);
    const double mass_term = dist.log_density(path.log_index(state.t)) / state.phi;
    return bracket * (state.K / state.Y) * mass_term * path.g();
}

WageGrowthTerms wage_growth_decomposition(const EconomyParams& params, const TrajectoryPoint& p1,
                                          const TrajectoryPoint& p2) {
    params.validate();
    if (p1.region != Region::One || p2.region != Region::One)
        throw DomainError("wage growth decomposition requires region-1 points");
    if (!(p2.t > p1.t)) throw DomainError("points must be in increasing time order");
    if (p1.phi == 0.0 || p2.phi == 0.0) throw DomainError("decomposition needs a positive automated share");
    const double sig = params.sigma;
    const double h = p2.t - p1.t;
    const double g_K = (std::log(p2.K) - std::log(p1.K)) / h;
    const double g_phi = -(std::log(p2.unautomated) - std::log(p1.unautomated)) / h;  // dPhi/dt / (1 - Phi)
    const double s_L = 0.5 * (p1.labor_share + p2.labor_share);
    const double s_K = 1.0 - s_L;
    const double phi = 0.5 * (p1.phi + p2.phi);
    const double unaut = 0.5 * (p1.unautomated + p2.unautomated);
    WageGrowthTerms terms;
    terms.capital = s_K * g_K / sig;
    terms.productivity = g_phi * (s_L - s_K * unaut / phi) / (sig * (1.0 - sig));
    terms.displacement = -g_phi / sig;
    return terms;
}

}  // namespace taskecon
