#include <cmath>
#include <limits>

#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

namespace taskecon {

SingularityCheck singularity_condition(double phi, double gamma, double theta) {
    if (!(phi >= 0.0 && phi <= 1.0)) throw DomainError("phi must lie in [0,1]");
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("gamma must lie in [0,1]");
    if (!(theta < 1.0)) throw DomainError("theta must be below one");
    if (phi == 1.0) return {std::numeric_limits<double>::infinity(), gamma > 0.0};
    const double ratio = gamma / ((1.0 - phi) * (1.0 - theta));
    return {ratio, ratio > 1.0};
}

void RndParams::validate() const {
    if (!(theta < 1.0)) throw DomainError("theta must be below one");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("savings rate must lie in (0,1)");
    if (!(c > 0.0 && c < 1.0)) throw DomainError("capital split must lie in (0,1)");
    if (!(L_A > 0.0) || !(L_Y > 0.0)) throw DomainError("sector labor endowments must be positive");
    if (!(A0 > 0.0)) throw DomainError("initial technology must be positive");
    if (!(growth_cap > 0.0)) throw DomainError("growth cap must be positive");
    if (frozen) {
        if (!(frozen->first >= 0.0 && frozen->first <= 1.0) || !(frozen->second >= 0.0 && frozen->second <= 1.0))
            throw DomainError("frozen automation shares must lie in [0,1]");
    }
}

namespace {

// Unit-elasticity task aggregate with unit productivity: Cobb-Douglas in the
// per-task inputs when labor is scarce, linear once it is not.
struct Block {
    double out = 0.0;
    double mpk = 0.0;
    double mpl = 0.0;
    Region region = Region::One;
};

Block task_block(double X, double N, const AutomationShare& a) {
    if (a.none()) return {N, 0.0, 1.0, Region::One};
    if (a.full() || !(X * a.unautomated > a.automated * N)) return {X + N, 1.0, 1.0, Region::Two};
    const double log_out =
        a.automated * std::log(X / a.automated) + a.unautomated * std::log(N / a.unautomated);
    const double out = std::exp(log_out);
    return {out, a.automated * out / X, a.unautomated * out / N, Region::One};
}

struct Shares {
    AutomationShare phi;
    AutomationShare gamma;
};

class TwoSector {
public:
    TwoSector(const RndParams& rnd, const TaskDistribution& dist, const AutomationPath& path)
        : rnd_(rnd), dist_(dist), path_(path) {}

    Shares shares(double t) const {
        if (rnd_.frozen)
            return {AutomationShare::from_automated(rnd_.frozen->first),
                    AutomationShare::from_automated(rnd_.frozen->second)};
        return {share_at_time(dist_, path_, t), share_at_time(rnd_.gamma, path_, t)};
    }

    // Log-growth rates of K and A at (log K, log A).
    bool rates(double t, double lK, double lA, double& gK, double& gA) const {
        const double K = std::exp(lK);
        const double A = std::exp(lA);
        if (!std::isfinite(K) || !std::isfinite(A) || !(K > 0.0)) return false;
        const auto sh = shares(t);
        const auto fin = task_block(rnd_.c * K, rnd_.L_Y, sh.phi);
        const auto ideas = task_block((1.0 - rnd_.c) * K, rnd_.L_A, sh.gamma);
        gK = rnd_.s * A * fin.out / K;
        gA = std::exp((rnd_.theta - 1.0) * lA) * ideas.out;
        return std::isfinite(gK) && std::isfinite(gA);
    }

    TrajectoryPoint point(double t, double lK, double lA) const {
        const double K = std::exp(lK);
        const double A = std::exp(lA);
        const auto sh = shares(t);
        const auto fin = task_block(rnd_.c * K, rnd_.L_Y, sh.phi);
        TrajectoryPoint p;
        p.t = t;
        p.I = path_.index(t);
        p.phi = sh.phi.automated;
        p.unautomated = sh.phi.unautomated;
        p.region = fin.region;
        p.K = K;
        p.Y = A * fin.out;
        p.C = (1.0 - rnd_.s) * p.Y;
        p.w = A * fin.mpl;
        p.R = A * fin.mpk;
        p.labor_share = p.w * rnd_.L_Y / p.Y;
        p.savings_rate = rnd_.s;
        return p;
    }

    double log_output(double t, double lK, double lA) const {
        const auto sh = shares(t);
        return lA + std::log(task_block(rnd_.c * std::exp(lK), rnd_.L_Y, sh.phi).out);
    }

    const RndParams& rnd() const { return rnd_; }

private:
    RndParams rnd_;
    const TaskDistribution& dist_;
    AutomationPath path_;
};

}  // namespace

TwoSectorRun simulate_two_sector(const RndParams& rnd, const TaskDistribution& phi_dist, const AutomationPath& path,
                                 const SolverSettings& settings, double K0) {
    rnd.validate();
    settings.validate();
    if (!(K0 > 0.0)) throw DomainError("initial capital must be positive");
    const TwoSector model(rnd, phi_dist, path);
    const double h = settings.dt;
    const long n_total = std::lround(settings.horizon / h);
    const long stride = std::max(1L, std::lround(settings.record_stride / h));

    TwoSectorRun run;
    auto record = [&](double t, double lK, double lA, double gA) {
        run.trajectory.points.push_back(model.point(t, lK, lA));
        run.tech.push_back(std::exp(lA));
        run.tech_growth.push_back(gA);
        run.gamma.push_back(model.shares(t).gamma.automated);
    };

    double lK = std::log(K0);
    double lA = std::log(rnd.A0);
    double gK = 0.0, gA = 0.0;
    if (!model.rates(0.0, lK, lA, gK, gA)) throw SolverError("two-sector rates undefined at t = 0");
    record(0.0, lK, lA, gA);
    for (long n = 0; n < n_total; ++n) {
        const double t = static_cast<double>(n) * h;
        double k1K = 0, k1A = 0, k2K = 0, k2A = 0, k3K = 0, k3A = 0, k4K = 0, k4A = 0;
        bool ok = model.rates(t, lK, lA, k1K, k1A);
        double nK = lK + h * k1K, nA = lA + h * k1A;
        if (ok && settings.integrator == Integrator::RK4) {
            ok = model.rates(t + 0.5 * h, lK + 0.5 * h * k1K, lA + 0.5 * h * k1A, k2K, k2A) &&
                 model.rates(t + 0.5 * h, lK + 0.5 * h * k2K, lA + 0.5 * h * k2A, k3K, k3A) &&
                 model.rates(t + h, lK + h * k3K, lA + h * k3A, k4K, k4A);
            nK = lK + h / 6.0 * (k1K + 2.0 * k2K + 2.0 * k3K + k4K);
            nA = lA + h / 6.0 * (k1A + 2.0 * k2A + 2.0 * k3A + k4A);
        }
        double ngK = 0.0, ngA = 0.0;
        if (!ok || !model.rates(t + h, nK, nA, ngK, ngA)) {
            // Overflow before the growth cap: report the singularity at the last valid step.
            run.blowup_time = t;
            if (run.trajectory.points.back().t != t) record(t, lK, lA, gA);
            break;
        }
        const double growth_Y = (model.log_output(t + h, nK, nA) - model.log_output(t, lK, lA)) / h;
        lK = nK;
        lA = nA;
        gA = ngA;
        const bool last = n + 1 == n_total;
        if (growth_Y > rnd.growth_cap) {
            run.blowup_time = t + h;
            record(t + h, lK, lA, gA);
            break;
        }
        if ((n + 1) % stride == 0 || last) record(t + h, lK, lA, gA);
    }
    return run;
}

}  // namespace taskecon
