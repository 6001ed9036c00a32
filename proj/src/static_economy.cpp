#include "taskecon/static_economy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "taskecon/errors.hpp"

namespace taskecon {

namespace {

double log_sum_exp(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

void check_capital(double K) {
    if (!(K >= 0.0) || !std::isfinite(K)) throw DomainError("capital must be finite and non-negative");
}

StaticEquilibrium region_two(const EconomyParams& p, double K) {
    StaticEquilibrium eq;
    eq.region = Region::Two;
    eq.Y = p.A * (K + p.L);
    eq.w = p.A;
    eq.R = p.A;
    eq.labor_share = p.L / (K + p.L);
    eq.k = K + p.L;
    eq.ell = K + p.L;
    return eq;
}

}  // namespace

void EconomyParams::validate() const {
    if (!(A > 0.0) || !std::isfinite(A)) throw DomainError("A must be positive");
    if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma must lie strictly inside (0,1)");
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("L must be positive");
}

double region_threshold_phi(double K, double L) {
    if (!(L > 0.0)) throw DomainError("labor endowment must be positive");
    check_capital(K);
    return K / (K + L);
}

double kappa(double phi) { return kappa(AutomationShare::from_automated(phi)); }

double kappa(const AutomationShare& share) {
    if (share.full()) throw DomainError("kappa is infinite at full automation");
    return share.automated / share.unautomated;
}

StaticEquilibrium static_equilibrium(const EconomyParams& p, double K, double phi) {
    return static_equilibrium(p, K, AutomationShare::from_automated(phi));
}

StaticEquilibrium static_equilibrium(const EconomyParams& p, double K, const AutomationShare& s) {
    p.validate();
    check_capital(K);
    if (s.full()) return region_two(p, K);

    StaticEquilibrium eq;
    if (s.none()) {
        // No automatable tasks: capital is idle.
        eq.region = Region::One;
        eq.Y = p.A * p.L;
        eq.w = p.A;
        eq.R = 0.0;
        eq.labor_share = 1.0;
        eq.k = K > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        eq.ell = p.L;
        return eq;
    }
    // Region 1 iff K/L > Phi/(1-Phi); ties go to region 2.
    if (!(K * s.unautomated > s.automated * p.L)) return region_two(p, K);

    // CES evaluated in logs; the exponents 1/sigma overflow for small sigma.
    const double sig = p.sigma;
    const double r = (sig - 1.0) / sig;
    const double logK = std::log(K);
    const double logL = std::log(p.L);
    const double logA = std::log(p.A);
    const double cap_term = r * logK + std::log(s.automated) / sig;
    const double lab_term = r * logL + std::log(s.unautomated) / sig;
    const double lse = log_sum_exp(cap_term, lab_term);
    const double logY = logA + lse / r;

    eq.region = Region::One;
    eq.Y = std::exp(logY);
    eq.R = std::exp(r * logA + (logY - logK + std::log(s.automated)) / sig);
    eq.w = std::exp(r * logA + (logY - logL + std::log(s.unautomated)) / sig);
    eq.labor_share = std::exp(lab_term - lse);
    eq.k = K / s.automated;
    eq.ell = p.L / s.unautomated;
    return eq;
}

FrontierWage fpf_wage(const EconomyParams& p, double phi, double R) {
    return fpf_wage(p, AutomationShare::from_automated(phi), R);
}

FrontierWage fpf_wage(const EconomyParams& p, const AutomationShare& s, double R) {
    p.validate();
    if (!(R > 0.0)) throw DomainError("rental rate must be positive on the frontier");
    if (R > p.A) throw DomainError("no frontier point with R above A");
    if (s.full()) return {p.A, true};
    const double e = 1.0 - p.sigma;
    const double a_pow = std::pow(p.A, e);
    // A^(1-s) - R^(1-s) Phi, rearranged to keep precision when 1 - Phi is tiny.
    const double numer = a_pow * s.unautomated + (a_pow - std::pow(R, e)) * s.automated;
    return {std::pow(numer / s.unautomated, 1.0 / e), false};
}

double limit_wage(const EconomyParams& p, double phi) {
    return limit_wage(p, AutomationShare::from_automated(phi));
}

double limit_wage(const EconomyParams& p, const AutomationShare& s) {
    p.validate();
    if (s.full()) throw DomainError("limit wage is unbounded at full automation");
    return p.A * std::exp(std::log(s.unautomated) / (p.sigma - 1.0));
}

double wage_response(const EconomyParams& p, double K, double phi) {
    return wage_response(p, K, AutomationShare::from_automated(phi));
}

double wage_response(const EconomyParams& p, double K, const AutomationShare& s) {
    const auto eq = static_equilibrium(p, K, s);
    if (eq.region != Region::One) throw DomainError("wage response is defined in region 1 only");
    const double sig = p.sigma;
    const double r = (sig - 1.0) / sig;
    const double k_term = std::isinf(eq.k) ? 0.0 : std::pow(eq.k, r);
    const double productivity =
        (k_term - std::pow(eq.ell, r)) * std::pow(eq.Y / p.A, -r) / (sig * (sig - 1.0));
    const double displacement = 1.0 / (sig * s.unautomated);
    return productivity - displacement;
}

}  // namespace taskecon
