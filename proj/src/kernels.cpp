#include "taskecon/kernels.hpp"

#include <cmath>

#include "taskecon/errors.hpp"

namespace taskecon {

namespace {

void check_sizes(std::span<const double> masses, std::span<const double> levels) {
    if (masses.size() != levels.size()) throw DomainError("bucket masses and levels differ in length");
}

void check_points(std::size_t points) {
    if (points < 2) throw DomainError("frontier sampling needs at least two points");
}

// R sampled log-spaced from A down to A/1000.
double frontier_rate(double A, std::size_t i, std::size_t points) {
    const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
    return A * std::pow(1e-3, frac);
}

PhiSweepRow sweep_row(const EconomyParams& params, double K, double phi) {
    const auto eq = static_equilibrium(params, K, phi);
    return {phi, eq.Y, eq.w * params.L, eq.R * K, eq.region};
}

double bucket_term(double m, double y, double exponent) { return m > 0.0 ? m * std::pow(y, exponent) : 0.0; }

}  // namespace

namespace serial {

double bucket_ces_sum(std::span<const double> masses, std::span<const double> levels, double exponent) {
    check_sizes(masses, levels);
    double sum = 0.0;
    for (std::size_t j = 0; j < masses.size(); ++j) sum += bucket_term(masses[j], levels[j], exponent);
    return sum;
}

std::vector<StaticEquilibrium> equilibrium_sweep(const EconomyParams& params, double K,
                                                 std::span<const AutomationShare> shares) {
    std::vector<StaticEquilibrium> out(shares.size());
    for (std::size_t i = 0; i < shares.size(); ++i) out[i] = static_equilibrium(params, K, shares[i]);
    return out;
}

std::vector<FrontierPoint> fpf_curve(const EconomyParams& params, const AutomationShare& share,
                                     std::size_t points) {
    check_points(points);
    std::vector<FrontierPoint> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double R = frontier_rate(params.A, i, points);
        out[i] = {R, fpf_wage(params, share, R).w};
    }
    return out;
}

std::vector<PhiSweepRow> phi_sweep(const EconomyParams& params, double K, std::span<const double> phis) {
    std::vector<PhiSweepRow> out(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) out[i] = sweep_row(params, K, phis[i]);
    return out;
}

}  // namespace serial

namespace parallel {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double bucket_ces_sum(std::span<const double> masses, std::span<const double> levels, double exponent) {
    check_sizes(masses, levels);
    const auto n = static_cast<long long>(masses.size());
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (long long j = 0; j < n; ++j)
        sum += bucket_term(masses[static_cast<std::size_t>(j)], levels[static_cast<std::size_t>(j)], exponent);
    return sum;
}

std::vector<StaticEquilibrium> equilibrium_sweep(const EconomyParams& params, double K,
                                                 std::span<const AutomationShare> shares) {
    params.validate();
    return map_indexed(shares.size(), [&](std::size_t i) { return static_equilibrium(params, K, shares[i]); });
}

std::vector<FrontierPoint> fpf_curve(const EconomyParams& params, const AutomationShare& share,
                                     std::size_t points) {
    check_points(points);
    return map_indexed(points, [&](std::size_t i) {
        const double R = frontier_rate(params.A, i, points);
        return FrontierPoint{R, fpf_wage(params, share, R).w};
    });
}

std::vector<PhiSweepRow> phi_sweep(const EconomyParams& params, double K, std::span<const double> phis) {
    return map_indexed(phis.size(), [&](std::size_t i) { return sweep_row(params, K, phis[i]); });
}

}  // namespace parallel

}  // namespace taskecon
