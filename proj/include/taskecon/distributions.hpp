#pragma once

#include <optional>
#include <string>
#include <variant>

namespace taskecon {

/// Split of the unit task mass into automated (Phi) and unautomated (1 - Phi)
/// parts. Both parts are stored so that a vanishing unautomated share keeps
/// full relative precision far into a Pareto tail.
struct AutomationShare {
    double automated = 0.0;
    double unautomated = 1.0;

    static AutomationShare from_automated(double phi);
    static AutomationShare from_unautomated(double survival);

    bool full() const noexcept { return unautomated == 0.0; }
    bool none() const noexcept { return automated == 0.0; }
};

/// Exponential growth of the automation index, I(t) = I0 * exp(g t).
/// The index is kept in logs; I(t) overflows a double for long horizons.
class AutomationPath {
public:
    AutomationPath(double I0, double g);
    static AutomationPath from_log(double log_I0, double g);

    double log_I0() const noexcept { return log_I0_; }
    double g() const noexcept { return g_; }
    double log_index(double t) const noexcept { return log_I0_ + g_ * t; }
    double index(double t) const;

private:
    AutomationPath() = default;
    double log_I0_ = 0.0;
    double g_ = 1.0;
};

/// Phi(i) = 1 - (i / scale)^(-lambda) for i >= scale, 0 below.
/// A standalone Pareto scenario uses scale = 1.
struct Pareto {
    double lambda = 0.01;
    double log_scale = 0.0;
};

/// Phi(i) = 1 - (1 - log i / log Imax)^beta on [1, Imax], 1 above.
struct PowerBounded {
    double beta = 1.0;
    double log_imax = 1.0;
};

/// Phi = omega * Phi_power + (1 - omega) * Phi_pareto.
struct Mixture {
    double omega = 0.5;
    Pareto pareto;
    PowerBounded power;
};

/// Distribution of task complexity over the automation index.
class TaskDistribution {
public:
    using Family = std::variant<Pareto, PowerBounded, Mixture>;

    TaskDistribution(Pareto p);
    TaskDistribution(PowerBounded p);
    TaskDistribution(Mixture m);

    const Family& family() const noexcept { return family_; }
    bool is_pareto() const noexcept { return std::holds_alternative<Pareto>(family_); }
    std::string name() const;

    /// Task shares at log-index x (x >= 0).
    AutomationShare share_at_log(double log_i) const;
    /// d(1 - Phi)/d(log i), negated; i.e. the density in log-index.
    double log_density(double log_i) const;

private:
    Family family_;
};

/// A distribution paired with the automation path it was calibrated against.
struct CalibratedAutomation {
    TaskDistribution dist;
    AutomationPath path;
};

/// Pareto scenario with Phi(I0) = phi0 and unautomated share decaying at lambda_g.
CalibratedAutomation calibrate_pareto(double phi0, double lambda_g, double g = 1.0);
/// Bounded power scenario with Phi(I0) = phi0 reaching full automation after T years.
CalibratedAutomation calibrate_power(double phi0, double T, double beta = 1.0, double g = 1.0);
/// Mixture whose components are each calibrated to phi0 at the common I0: the
/// power component completes after T years, the Pareto tail decays at lambda_g.
CalibratedAutomation calibrate_mixture(double phi0, double omega, double lambda_g, double T,
                                       double beta = 1.0, double g = 1.0);

double phi_cdf(const TaskDistribution& dist, double i);
double phi_density(const TaskDistribution& dist, double i);

AutomationShare share_at_time(const TaskDistribution& dist, const AutomationPath& path, double t);
double automated_fraction(const TaskDistribution& dist, const AutomationPath& path, double t);

/// Smallest t >= 0 with automated_fraction(t) >= target; nullopt if never reached.
std::optional<double> time_to_fraction(const TaskDistribution& dist, const AutomationPath& path,
                                       double target);
std::optional<double> full_automation_time(const TaskDistribution& dist, const AutomationPath& path);

}  // namespace taskecon
