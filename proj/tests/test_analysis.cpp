#include <doctest.h>

#include <cmath>
#include <vector>

#include "taskecon/analysis.hpp"
#include "taskecon/errors.hpp"

using namespace taskecon;

TEST_CASE("regime thresholds") {
    const EconomyParams p;
    const PreferenceParams prefs;
    const auto r = classify_long_run(p, prefs, 0.01);
    CHECK(r.lambda_g_hi == doctest::Approx((0.5 - 0.14) / 2.0).epsilon(1e-15));
    CHECK(r.lambda_g_lo == doctest::Approx(0.5 * (0.5 - 0.14) / 2.0).epsilon(1e-15));
    CHECK(r.regime == Regime::AutomationConstrained);
    CHECK(classify_long_run(p, prefs, 0.12).regime == Regime::CapitalConstrained);
    CHECK(classify_long_run(p, prefs, 0.2).regime == Regime::Collapse);
    CHECK(classify_long_run(p, prefs, 0.2).asymptotic_wage_growth == 0.0);
}

TEST_CASE("predicted wage growth is continuous and peaks at the lower threshold") {
    const EconomyParams p;
    const PreferenceParams prefs;
    const auto [lg, g] = wage_max_rate(p, prefs);
    const auto r = classify_long_run(p, prefs, lg);
    CHECK(lg == doctest::Approx(r.lambda_g_lo).epsilon(1e-15));
    const double eps = 1e-9;
    CHECK(predicted_wage_growth(p, prefs, lg - eps) == doctest::Approx(g).epsilon(1e-7));
    CHECK(predicted_wage_growth(p, prefs, lg + eps) == doctest::Approx(g).epsilon(1e-7));
    CHECK(predicted_wage_growth(p, prefs, r.lambda_g_hi - eps) == doctest::Approx(0.0).epsilon(1e-7));
    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(0.0018 * i);
    for (const auto& pt : wage_growth_curve(p, prefs, grid)) CHECK(pt.growth <= g + 1e-15);
    CHECK_THROWS_AS(wage_growth_curve(p, prefs, std::vector<double>{-0.1}), DomainError);
}

TEST_CASE("labor share limit lies strictly between zero and one") {
    const EconomyParams p;
    const PreferenceParams prefs;
    for (double lg : {0.001, 0.01, 0.05, 0.089}) {
        const double s = labor_share_limit_case3(p, prefs, lg);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
    }
    CHECK(labor_share_limit_case3(p, prefs, 0.01) == doctest::Approx(0.5714).epsilon(1e-4));
}

TEST_CASE("tail automation rate by family") {
    CHECK(*tail_automation_rate(calibrate_pareto(0.608, 0.03).dist, calibrate_pareto(0.608, 0.03).path) ==
          doctest::Approx(0.03).epsilon(1e-14));
    const auto pw = calibrate_power(0.608, 20.0);
    CHECK_FALSE(tail_automation_rate(pw.dist, pw.path).has_value());
    const auto mx = calibrate_mixture(0.608, 0.88, 0.01, 5.0);
    CHECK(*tail_automation_rate(mx.dist, mx.path) == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("terminal consumption ratio") {
    const EconomyParams p;
    const PreferenceParams prefs;
    CHECK(terminal_consumption_ratio(p, prefs, std::nullopt) ==
          doctest::Approx(1.0 - long_run_savings(prefs, p.A)).epsilon(1e-15));
    const double r = terminal_consumption_ratio(p, prefs, 0.01);
    CHECK(r > 0.0);
    CHECK(r < 1.0);
}

TEST_CASE("tail growth of an exponential series") {
    Trajectory traj;
    for (int i = 0; i <= 100; ++i) {
        TrajectoryPoint pt;
        pt.t = i;
        pt.Y = 2.0 * std::exp(0.03 * i);
        pt.w = std::exp(-0.01 * i);
        pt.K = 1.0;
        pt.C = 1.0;
        traj.points.push_back(pt);
    }
    CHECK(tail_growth(traj, Series::Y) == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(tail_growth(traj, Series::w) == doctest::Approx(-0.01).epsilon(1e-12));
    CHECK(tail_growth(traj, Series::K) == 0.0);
}

TEST_CASE("omega matches its definition") {
    const EconomyParams p;
    TrajectoryPoint pt;
    pt.K = 4.6;
    pt.phi = 0.608;
    pt.unautomated = 0.392;
    const double expected = std::pow(4.6, (p.sigma - 1.0) / p.sigma) * std::pow(0.608 / 0.392, 1.0 / p.sigma);
    CHECK(omega(p, pt).omega == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("classification needs a pareto distribution") {
    const auto pw = calibrate_power(0.608, 20.0);
    CHECK_THROWS_AS(classify_long_run(pw.dist, pw.path, EconomyParams{}, PreferenceParams{}), DomainError);
    CHECK(to_string(Regime::CapitalConstrained) == "CapitalConstrained");
}
