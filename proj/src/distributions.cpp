#include "taskecon/distributions.hpp"

#include <cmath>
#include <limits>

#include "taskecon/errors.hpp"

namespace taskecon {

namespace {

// Unautomated shares this close to zero at a bounded support edge are exact full automation.
constexpr double kFullAutomationSnap = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const Pareto& p) {
    if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
        throw DomainError("Pareto decay rate must be positive");
    if (!std::isfinite(p.log_scale)) throw DomainError("Pareto scale must be finite");
}

void validate(const PowerBounded& p) {
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) throw DomainError("power exponent must be positive");
    if (!(p.log_imax > 0.0) || !std::isfinite(p.log_imax))
        throw DomainError("power distribution needs Imax > 1");
}

double pareto_survival(const Pareto& p, double x) {
    if (x <= p.log_scale) return 1.0;
    return std::exp(-p.lambda * (x - p.log_scale));
}

double pareto_log_density(const Pareto& p, double x) {
    if (x < p.log_scale) return 0.0;
    return p.lambda * std::exp(-p.lambda * (x - p.log_scale));
}

double power_survival(const PowerBounded& p, double x) {
    if (x >= p.log_imax) return 0.0;
    const double s = std::pow(1.0 - x / p.log_imax, p.beta);
    return s < kFullAutomationSnap ? 0.0 : s;
}

double power_log_density(const PowerBounded& p, double x) {
    if (x > p.log_imax) return 0.0;
    if (x == p.log_imax) {
        if (p.beta < 1.0) throw DomainError("density unbounded at the upper support edge");
        return p.beta == 1.0 ? 1.0 / p.log_imax : 0.0;
    }
    return p.beta / p.log_imax * std::pow(1.0 - x / p.log_imax, p.beta - 1.0);
}

}  // namespace

AutomationShare AutomationShare::from_automated(double phi) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("automated share must lie in [0,1]");
    return {phi, 1.0 - phi};
}

AutomationShare AutomationShare::from_unautomated(double survival) {
    if (!(survival >= 0.0 && survival <= 1.0)) throw DomainError("unautomated share must lie in [0,1]");
    return {1.0 - survival, survival};
}

AutomationPath::AutomationPath(double I0, double g) : log_I0_(0.0), g_(g) {
    if (!(I0 >= 1.0) || !std::isfinite(I0)) throw DomainError("initial automation index must be >= 1");
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("automation growth rate must be positive");
    log_I0_ = std::log(I0);
}

AutomationPath AutomationPath::from_log(double log_I0, double g) {
    if (!(log_I0 >= 0.0) || !std::isfinite(log_I0)) throw DomainError("initial automation index must be >= 1");
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("automation growth rate must be positive");
    AutomationPath p;
    p.log_I0_ = log_I0;
    p.g_ = g;
    return p;
}

double AutomationPath::index(double t) const { return std::exp(log_index(t)); }

TaskDistribution::TaskDistribution(Pareto p) : family_(p) { validate(p); }

TaskDistribution::TaskDistribution(PowerBounded p) : family_(p) { validate(p); }

TaskDistribution::TaskDistribution(Mixture m) : family_(m) {
    if (!(m.omega >= 0.0 && m.omega <= 1.0)) throw DomainError("mixture weight must lie in [0,1]");
    validate(m.pareto);
    validate(m.power);
}

std::string TaskDistribution::name() const {
    return std::visit(Overloaded{[](const Pareto&) { return std::string("pareto"); },
                                 [](const PowerBounded&) { return std::string("power"); },
                                 [](const Mixture&) { return std::string("mixture"); }},
                      family_);
}

AutomationShare TaskDistribution::share_at_log(double x) const {
    if (!(x >= 0.0)) throw DomainError("automation index must be >= 1");
    const double s = std::visit(
        Overloaded{[x](const Pareto& p) { return pareto_survival(p, x); },
                   [x](const PowerBounded& p) { return power_survival(p, x); },
                   [x](const Mixture& m) {
                       return m.omega * power_survival(m.power, x) +
                              (1.0 - m.omega) * pareto_survival(m.pareto, x);
                   }},
        family_);
    return {1.0 - s, s};
}

double TaskDistribution::log_density(double x) const {
    if (!(x >= 0.0)) throw DomainError("automation index must be >= 1");
    return std::visit(Overloaded{[x](const Pareto& p) { return pareto_log_density(p, x); },
                                 [x](const PowerBounded& p) { return power_log_density(p, x); },
                                 [x](const Mixture& m) {
                                     return m.omega * power_log_density(m.power, x) +
                                            (1.0 - m.omega) * pareto_log_density(m.pareto, x);
                                 }},
                      family_);
}

CalibratedAutomation calibrate_pareto(double phi0, double lambda_g, double g) {
    if (!(phi0 > 0.0 && phi0 < 1.0)) throw DomainError("initial automated share must lie in (0,1)");
    if (!(lambda_g > 0.0)) throw DomainError("rate of task automation must be positive");
    const double lambda = lambda_g / g;
    const double log_I0 = -std::log1p(-phi0) / lambda;
    return {TaskDistribution(Pareto{lambda, 0.0}), AutomationPath::from_log(log_I0, g)};
}

CalibratedAutomation calibrate_power(double phi0, double T, double beta, double g) {
    if (!(phi0 > 0.0 && phi0 < 1.0)) throw DomainError("initial automated share must lie in (0,1)");
    if (!(T > 0.0)) throw DomainError("time to full automation must be positive");
    if (!(beta > 0.0)) throw DomainError("power exponent must be positive");
    // (g T / (log I0 + g T))^beta = 1 - phi0
    const double log_I0 = g * T * (std::pow(1.0 - phi0, -1.0 / beta) - 1.0);
    return {TaskDistribution(PowerBounded{beta, log_I0 + g * T}), AutomationPath::from_log(log_I0, g)};
}

CalibratedAutomation calibrate_mixture(double phi0, double omega, double lambda_g, double T, double beta,
                                       double g) {
    const auto power = calibrate_power(phi0, T, beta, g);
    const double log_I0 = power.path.log_I0();
    const double lambda = lambda_g / g;
    if (!(lambda > 0.0)) throw DomainError("rate of task automation must be positive");
    Mixture m;
    m.omega = omega;
    m.power = std::get<PowerBounded>(power.dist.family());
    m.pareto = Pareto{lambda, log_I0 + std::log1p(-phi0) / lambda};
    return {TaskDistribution(m), power.path};
}

double phi_cdf(const TaskDistribution& dist, double i) {
    if (!(i >= 1.0)) throw DomainError("phi_cdf requires i >= 1");
    return dist.share_at_log(std::log(i)).automated;
}

double phi_density(const TaskDistribution& dist, double i) {
    if (!(i >= 1.0)) throw DomainError("phi_density requires i >= 1");
    const double x = std::log(i);
    const double d = dist.log_density(x);
    return d == 0.0 ? 0.0 : std::exp(std::log(d) - x);
}

AutomationShare share_at_time(const TaskDistribution& dist, const AutomationPath& path, double t) {
    if (!(t >= 0.0)) throw DomainError("time must be non-negative");
    return dist.share_at_log(path.log_index(t));
}

double automated_fraction(const TaskDistribution& dist, const AutomationPath& path, double t) {
    return share_at_time(dist, path, t).automated;
}

std::optional<double> full_automation_time(const TaskDistribution& dist, const AutomationPath& path) {
    auto from_power = [&](const PowerBounded& p) {
        return std::max(0.0, (p.log_imax - path.log_I0()) / path.g());
    };
    return std::visit(Overloaded{[](const Pareto&) -> std::optional<double> { return std::nullopt; },
                                 [&](const PowerBounded& p) -> std::optional<double> { return from_power(p); },
                                 [&](const Mixture& m) -> std::optional<double> {
                                     if (m.omega < 1.0) return std::nullopt;
                                     return from_power(m.power);
                                 }},
                      dist.family());
}

std::optional<double> time_to_fraction(const TaskDistribution& dist, const AutomationPath& path,
                                       double target) {
    if (!(target > 0.0 && target <= 1.0)) throw DomainError("target fraction must lie in (0,1]");
    const double survival_target = 1.0 - target;
    auto reached = [&](double t) { return share_at_time(dist, path, t).unautomated <= survival_target; };
    if (reached(0.0)) return 0.0;
    if (target == 1.0) return full_automation_time(dist, path);

    double lo = 0.0;
    double hi = 1.0;
    while (!reached(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e15) return std::nullopt;
    }
    for (int it = 0; it < 400 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (reached(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace taskecon
