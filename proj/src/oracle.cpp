#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "taskecon/errors.hpp"
#include "taskecon/kernels.hpp"
#include "taskecon/static_economy.hpp"

namespace taskecon {

namespace {

struct Buckets {
    std::vector<double> mass;
    std::vector<double> level;
    std::size_t n_auto = 0;
};

// Equal marginal products across identical buckets of one group means one
// common water level: resources spread in proportion to bucket mass.
double water_level(std::span<const double> masses, double resources) {
    const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
    return total > 0.0 ? resources / total : 0.0;
}

class AllocationProblem {
public:
    AllocationProblem(const EconomyParams& p, double K, const AutomationShare& s, std::size_t n, bool par)
        : p_(p), K_(K), parallel_(par) {
        std::size_t n_auto = 0;
        if (s.full())
            n_auto = n;
        else if (!s.none())
            n_auto = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(s.automated * n)), 1, n - 1);
        const std::size_t n_lab = n - n_auto;
        b_.n_auto = n_auto;
        b_.mass.assign(n, 0.0);
        b_.level.assign(n, 0.0);
        for (std::size_t j = 0; j < n_auto; ++j) b_.mass[j] = s.automated / static_cast<double>(n_auto);
        for (std::size_t j = n_auto; j < n; ++j) b_.mass[j] = s.unautomated / static_cast<double>(n_lab);
        r_ = (p.sigma - 1.0) / p.sigma;
    }

    std::size_t n_auto() const { return b_.n_auto; }
    std::size_t n_lab() const { return b_.mass.size() - b_.n_auto; }

    // Allocate for a given amount of labor moved into automated tasks.
    void allocate(double labor_in_auto) {
        const std::span<const double> m(b_.mass);
        const double y_auto = water_level(m.first(b_.n_auto), K_ + labor_in_auto);
        const double y_lab = water_level(m.subspan(b_.n_auto), p_.L - labor_in_auto);
        std::fill(b_.level.begin(), b_.level.begin() + static_cast<long>(b_.n_auto), y_auto);
        std::fill(b_.level.begin() + static_cast<long>(b_.n_auto), b_.level.end(), y_lab);
    }

    double ces_sum() const {
        return parallel_ ? parallel::bucket_ces_sum(b_.mass, b_.level, r_)
                         : serial::bucket_ces_sum(b_.mass, b_.level, r_);
    }

    double output(double labor_in_auto) {
        allocate(labor_in_auto);
        const double sum = ces_sum();
        if (!std::isfinite(sum)) return 0.0;  // an empty task with positive mass
        return p_.A * std::pow(sum, 1.0 / r_);
    }

    // Marginal product of one unit of resource added to a bucket at level y.
    double marginal(double y) const {
        const double sum = ces_sum();
        return p_.A * std::pow(sum, 1.0 / r_ - 1.0) * std::pow(y, -1.0 / p_.sigma);
    }

    const Buckets& buckets() const { return b_; }

private:
    EconomyParams p_;
    double K_;
    bool parallel_;
    double r_ = -1.0;
    Buckets b_;
};

}  // namespace

StaticEquilibrium oracle_equilibrium(const EconomyParams& p, double K, const AutomationShare& s,
                                     std::size_t n_tasks, const OracleOptions& opts) {
    p.validate();
    if (n_tasks < 2) throw DomainError("oracle needs at least two task buckets");
    if (!(K >= 0.0)) throw DomainError("capital must be non-negative");

    AllocationProblem prob(p, K, s, n_tasks, opts.parallel);

    // Golden-section search for the output-maximizing labor split.
    double split = 0.0;
    if (prob.n_auto() == 0) {
        split = 0.0;
    } else if (prob.n_lab() == 0) {
        split = p.L;
    } else {
        const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = 0.0;
        double b = p.L;
        double c = b - golden * (b - a);
        double d = a + golden * (b - a);
        double fc = prob.output(c);
        double fd = prob.output(d);
        int it = 0;
        while (b - a > opts.tol * p.L) {
            if (++it > opts.max_iter) throw SolverError("allocation oracle did not converge");
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - golden * (b - a);
                fc = prob.output(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + golden * (b - a);
                fd = prob.output(d);
            }
        }
        split = 0.5 * (a + b);
        if (split <= 10.0 * opts.tol * p.L) split = 0.0;
    }

    StaticEquilibrium eq;
    eq.Y = prob.output(split);
    const auto& b = prob.buckets();
    const double y_auto = b.n_auto > 0 ? b.level.front() : 0.0;
    const double y_lab = b.n_auto < b.level.size() ? b.level.back() : 0.0;
    if (b.n_auto == 0) {
        eq.region = Region::One;
        eq.R = 0.0;
        eq.w = prob.marginal(y_lab);
    } else if (b.n_auto == b.level.size() || split > 0.0) {
        eq.region = Region::Two;
        eq.R = prob.marginal(y_auto);
        eq.w = b.n_auto == b.level.size() ? eq.R : prob.marginal(y_lab);
    } else {
        eq.region = Region::One;
        eq.R = prob.marginal(y_auto);
        eq.w = prob.marginal(y_lab);
    }
    eq.k = y_auto;
    eq.ell = y_lab;
    eq.labor_share = eq.Y > 0.0 ? eq.w * p.L / eq.Y : 0.0;
    return eq;
}

}  // namespace taskecon
