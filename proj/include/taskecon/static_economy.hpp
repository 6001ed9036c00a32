#pragma once

#include <cstddef>

#include "taskecon/distributions.hpp"

namespace taskecon {

/// Technology and labor endowment of the CES task economy.
struct EconomyParams {
    double A = 0.5;      // total factor productivity
    double sigma = 0.5;  // elasticity of substitution between tasks, in (0,1)
    double L = 1.0;      // labor endowment

    void validate() const;
    bool operator==(const EconomyParams&) const = default;
};

enum class Region { One = 1, Two = 2 };

/// Static equilibrium for given (K, L, Phi).
struct StaticEquilibrium {
    Region region = Region::One;
    double Y = 0.0;
    double w = 0.0;
    double R = 0.0;
    double labor_share = 0.0;
    double k = 0.0;    // capital per automated task
    double ell = 0.0;  // labor per unautomated task
};

/// Automated share at which labor stops being scarce for endowments (K, L).
double region_threshold_phi(double K, double L);

/// Capital-labor ratio below which the economy is in region 2.
double kappa(double phi);
double kappa(const AutomationShare& share);

StaticEquilibrium static_equilibrium(const EconomyParams& params, double K, const AutomationShare& share);
StaticEquilibrium static_equilibrium(const EconomyParams& params, double K, double phi);

/// Point on the factor price frontier.
struct FrontierWage {
    double w = 0.0;
    bool degenerate = false;  // full automation: the frontier is the single point w = R = A
};

FrontierWage fpf_wage(const EconomyParams& params, const AutomationShare& share, double R);
FrontierWage fpf_wage(const EconomyParams& params, double phi, double R);

/// Wage as K/L grows without bound: A (1 - Phi)^(1/(sigma-1)).
double limit_wage(const EconomyParams& params, const AutomationShare& share);
double limit_wage(const EconomyParams& params, double phi);

/// d log w / d Phi at fixed (K, L): productivity term minus displacement term.
double wage_response(const EconomyParams& params, double K, const AutomationShare& share);
double wage_response(const EconomyParams& params, double K, double phi);

struct OracleOptions {
    double tol = 1e-10;
    int max_iter = 500;
    bool parallel = false;  // use the OpenMP bucket reduction
};

/// Discretized allocation oracle: spreads the task mass over n_tasks buckets,
/// allocates capital and labor by water-filling within the automated and
/// unautomated groups, and searches the labor split that maximizes output.
/// Prices are read off as bucket-level marginal products.
StaticEquilibrium oracle_equilibrium(const EconomyParams& params, double K, const AutomationShare& share,
                                     std::size_t n_tasks, const OracleOptions& opts = {});

}  // namespace taskecon
