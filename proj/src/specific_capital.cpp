#include <cmath>
#include <limits>

#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

namespace {

void validate(const SpecificCapitalState& s) {
    if (!(s.K > 0.0) || !std::isfinite(s.K)) throw DomainError("traditional capital must be positive");
    if (!(s.L > 0.0) || !std::isfinite(s.L)) throw DomainError("labor must be positive");
    if (!(s.phi_minus > 0.0 && s.phi_minus < 1.0)) throw DomainError("phi_minus must lie in (0,1)");
    if (!(s.delta_mass > 0.0)) throw DomainError("newly automated mass must be positive");
    if (!(s.phi_minus + s.delta_mass < 1.0)) throw DomainError("phi_minus + delta_mass must stay below one");
    if (!(s.k_spec >= 0.0) || !std::isfinite(s.k_spec)) throw DomainError("specific capital must be non-negative");
}

}  // namespace

SpecificCapitalThresholds specific_capital_thresholds(const SpecificCapitalState& s) {
    validate(s);
    const double phi = s.phi_minus + s.delta_mass;
    const SpecificCapitalThresholds th{s.L / (1.0 - phi), s.K / s.phi_minus};
    if (!(th.k1 < th.k2)) throw DomainError("specific-capital thresholds out of order: need k1 < k2");
    return th;
}

SpecificCapitalReturns specific_capital_returns(const EconomyParams& params, const SpecificCapitalState& s) {
    params.validate();
    const auto th = specific_capital_thresholds(s);
    const double phi = s.phi_minus + s.delta_mass;
    const double k = s.k_spec;
    SpecificCapitalReturns out;

    if (k < th.k1) {
        // Compute and labor share the new tasks as perfect substitutes.
        EconomyParams p = params;
        p.L = s.L + k * s.delta_mass;
        const auto eq = static_equilibrium(p, s.K, s.phi_minus);
        out = {eq.Y, eq.w, eq.R, eq.w, 1};
        return out;
    }
    if (k < th.k2) {
        const double sig = params.sigma;
        const double r = (sig - 1.0) / sig;
        const double unaut = 1.0 - phi;
        const double bracket = std::pow(s.K, r) * std::pow(s.phi_minus, 1.0 / sig) +
                               std::pow(k * s.delta_mass, r) * std::pow(s.delta_mass, 1.0 / sig) +
                               std::pow(s.L, r) * std::pow(unaut, 1.0 / sig);
        const double Y = params.A * std::pow(bracket, 1.0 / r);
        const double common = std::pow(params.A, r) * std::pow(Y, 1.0 / sig);
        out.Y = Y;
        out.w = common * std::pow(unaut / s.L, 1.0 / sig);
        out.R_traditional = common * std::pow(s.phi_minus / s.K, 1.0 / sig);
        out.R_specific = common * std::pow(k, -1.0 / sig);
        out.phase = 2;
        return out;
    }
    EconomyParams p = params;
    p.L = s.L;
    const auto eq = static_equilibrium(p, s.K + k * s.delta_mass, phi);
    out = {eq.Y, eq.w, eq.R, eq.R, 3};
    return out;
}

}  // namespace taskecon
