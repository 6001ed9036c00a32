#include <doctest.h>

#include <cmath>

#include "taskecon/dynamics.hpp"
#include "taskecon/errors.hpp"

using namespace taskecon;

namespace {

SolverSettings short_run(double horizon, double dt = 0.01, Integrator integ = Integrator::RK4) {
    SolverSettings s;
    s.horizon = horizon;
    s.dt = dt;
    s.integrator = integ;
    s.record_stride = horizon;
    return s;
}

}  // namespace

TEST_CASE("balanced growth and long-run savings") {
    const PreferenceParams prefs;
    CHECK(bgp_growth(prefs, 0.5) == doctest::Approx((0.5 - 0.04 - 0.1) / 2.0).epsilon(1e-15));
    const double g = bgp_growth(prefs, 0.5);
    CHECK(long_run_savings(prefs, 0.5) == doctest::Approx((g + prefs.delta) / 0.5).epsilon(1e-14));
}

TEST_CASE("capital upper bound is the root of R = rho + delta") {
    const EconomyParams p;
    const PreferenceParams prefs;
    for (double phi : {0.3, 0.608, 0.8}) {
        double lo = 1e-6, hi = 1e6;
        for (int i = 0; i < 300; ++i) {
            const double mid = 0.5 * (lo + hi);
            (static_equilibrium(p, mid, phi).R > prefs.rho + prefs.delta ? lo : hi) = mid;
        }
        CHECK(capital_upper_bound(p, prefs, phi) == doctest::Approx(lo).epsilon(1e-9));
    }
    CHECK(std::isinf(capital_upper_bound(p, prefs, AutomationShare::from_unautomated(0.0))));
}

TEST_CASE("consumption growth follows the Euler equation") {
    const EconomyParams p;
    const PreferenceParams prefs;
    const auto share = AutomationShare::from_automated(0.608);
    const double R = static_equilibrium(p, 4.6, share).R;
    CHECK(consumption_growth(p, prefs, 4.6, share) == doctest::Approx((R - 0.14) / 2.0).epsilon(1e-14));
}

TEST_CASE("first recorded point echoes the initial conditions") {
    const auto cal = calibrate_pareto(0.608, 0.01);
    SolverSettings s;
    s.horizon = 10.0;
    const auto traj = simulate(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, ConstantSavings{0.3}, s, 4.6);
    REQUIRE_FALSE(traj.points.empty());
    CHECK(traj.points.front().t == 0.0);
    CHECK(traj.points.front().K == 4.6);
    CHECK(traj.points.front().phi == doctest::Approx(0.608).epsilon(1e-14));
    CHECK(traj.points.size() == 101);
    CHECK(traj.points.back().t == doctest::Approx(10.0));
}

TEST_CASE("rk4 converges at fourth order and euler at first") {
    const auto cal = calibrate_pareto(0.608, 0.05);
    const EconomyParams p;
    const PreferenceParams prefs;
    auto final_K = [&](double dt, Integrator integ) {
        return simulate(cal.dist, cal.path, p, prefs, ConstantSavings{0.3}, short_run(10.0, dt, integ), 4.6)
            .points.back()
            .K;
    };
    const double ref = final_K(0.0025, Integrator::RK4);
    const double e1 = std::abs(final_K(0.5, Integrator::RK4) - ref);
    const double e2 = std::abs(final_K(0.25, Integrator::RK4) - ref);
    CHECK(std::log2(e1 / e2) == doctest::Approx(4.0).epsilon(0.15));
    const double f1 = std::abs(final_K(0.02, Integrator::Euler) - ref);
    const double f2 = std::abs(final_K(0.01, Integrator::Euler) - ref);
    CHECK(std::log2(f1 / f2) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("ramsey path satisfies the Euler equation and resource constraint") {
    const auto cal = calibrate_pareto(0.608, 0.01);
    const EconomyParams p;
    const PreferenceParams prefs;
    SolverSettings s;
    s.horizon = 60.0;
    const auto traj = simulate(cal.dist, cal.path, p, prefs, RamseyPolicy{}, s, 4.6);
    for (std::size_t i = 1; i + 1 < traj.points.size(); i += 37) {
        const auto& a = traj.points[i - 1];
        const auto& b = traj.points[i];
        const auto& c = traj.points[i + 1];
        const double h = c.t - a.t;
        const double dlogC = (std::log(c.C) - std::log(a.C)) / h;
        CHECK(dlogC == doctest::Approx((b.R - prefs.rho - prefs.delta) / prefs.eta).epsilon(1e-4));
        const double dK = (c.K - a.K) / h;
        CHECK(dK == doctest::Approx(b.Y - prefs.delta * b.K - b.C).epsilon(1e-4));
        CHECK(b.savings_rate == doctest::Approx(1.0 - b.C / b.Y).epsilon(1e-12));
    }
}

TEST_CASE("simulation is deterministic") {
    const auto cal = calibrate_power(0.608, 20.0);
    SolverSettings s;
    s.horizon = 40.0;
    const auto a = simulate(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, RamseyPolicy{}, s, 4.6);
    const auto b = simulate(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, RamseyPolicy{}, s, 4.6);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].K == b.points[i].K);
        CHECK(a.points[i].C == b.points[i].C);
    }
    CHECK(a.events.size() == b.events.size());
}

TEST_CASE("events are located on the integration grid") {
    const auto cal = calibrate_power(0.608, 20.0);
    SolverSettings s;
    s.horizon = 40.0;
    const auto traj = simulate(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, RamseyPolicy{}, s, 4.6);
    const auto entry = traj.event_time(EventKind::Region2Entry);
    const auto full = traj.event_time(EventKind::FullAutomation);
    REQUIRE(entry);
    REQUIRE(full);
    CHECK(*entry < *full);
    CHECK(std::abs(*entry / s.dt - std::round(*entry / s.dt)) < 1e-6);
    CHECK(to_string(EventKind::Region2Entry) == "region2_entry");
    CHECK(to_string(EventKind::Region1Reentry) == "region1_reentry");
}

TEST_CASE("bounds bracket capital") {
    const auto cal = calibrate_pareto(0.608, 0.01);
    SolverSettings s;
    s.horizon = 30.0;
    const auto [lower, upper] = bounds(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, s, 4.6);
    REQUIRE(lower.points.size() == upper.points.size());
    for (const auto& pt : lower.points) CHECK(pt.K == 4.6);
    for (std::size_t i = 0; i < upper.points.size(); ++i)
        CHECK(upper.points[i].K ==
              doctest::Approx(capital_upper_bound(EconomyParams{}, PreferenceParams{}, upper.points[i].share()))
                  .epsilon(1e-12));
}

TEST_CASE("balancing savings separates rising from falling wages") {
    const auto cal = calibrate_pareto(0.608, 0.05);
    const EconomyParams p;
    PreferenceParams prefs;
    prefs.delta = 0.0;
    const auto start = simulate(cal.dist, cal.path, p, prefs, ConstantSavings{0.2}, short_run(1.0), 4.6).points.front();
    const double s_bal = balancing_savings(p, prefs, start, cal.dist, cal.path);
    REQUIRE(s_bal > 0.0);
    REQUIRE(s_bal < 1.0);
    auto wage_change = [&](double s) {
        auto settings = short_run(1.0, 0.001);
        settings.record_stride = 0.05;
        const auto traj = simulate(cal.dist, cal.path, p, prefs, ConstantSavings{s}, settings, 4.6);
        return traj.at(0.05).w - traj.points.front().w;
    };
    CHECK(wage_change(s_bal * 1.05) > 0.0);
    CHECK(wage_change(s_bal * 0.95) < 0.0);
    CHECK_THROWS_AS(balancing_savings(p, PreferenceParams{}, start, cal.dist, cal.path), DomainError);
}

TEST_CASE("wage decomposition accounts for realized wage growth") {
    const auto cal = calibrate_pareto(0.608, 0.05);
    const EconomyParams p;
    SolverSettings s;
    s.horizon = 5.0;
    s.record_stride = 0.01;
    const auto traj = simulate(cal.dist, cal.path, p, PreferenceParams{}, ConstantSavings{0.3}, s, 4.6);
    for (std::size_t i = 1; i < traj.points.size(); i += 97) {
        const auto& a = traj.points[i - 1];
        const auto& b = traj.points[i];
        const auto terms = wage_growth_decomposition(p, a, b);
        const double realized = (std::log(b.w) - std::log(a.w)) / (b.t - a.t);
        CHECK(terms.total() == doctest::Approx(realized).epsilon(1e-5));
        CHECK(terms.capital > 0.0);
        CHECK(terms.productivity > 0.0);
        CHECK(terms.displacement < 0.0);
    }
}

TEST_CASE("invalid settings and preferences are rejected") {
    SolverSettings s;
    s.dt = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    PreferenceParams prefs;
    prefs.eta = 0.0;
    CHECK_THROWS_AS(prefs.validate(), DomainError);
    EconomyParams p;
    p.A = 0.1;
    CHECK_THROWS_AS(validate_calibration(p, PreferenceParams{}), DomainError);
}
