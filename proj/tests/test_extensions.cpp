#include <doctest.h>

#include <cmath>
#include <vector>

#include "taskecon/errors.hpp"
#include "taskecon/extensions.hpp"

using namespace taskecon;

TEST_CASE("fixed factor with unit weight is the baseline economy") {
    const EconomyParams p;
    FixedFactorParams ff;
    ff.alpha = 1.0;
    const auto a = fixed_factor_equilibrium(p, ff, 4.6, 0.608);
    const auto b = static_equilibrium(p, 4.6, 0.608);
    CHECK(a.eq.Y == doctest::Approx(b.Y).epsilon(1e-13));
    CHECK(a.eq.w == doctest::Approx(b.w).epsilon(1e-13));
    CHECK(a.Q == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("fixed factor prices are marginal products and exhaust output") {
    const EconomyParams p;
    const FixedFactorParams ff{0.9, 2.0};
    for (double phi : {0.608, 0.95}) {
        const double K = 4.6;
        const auto e = fixed_factor_equilibrium(p, ff, K, phi);
        const double h = 1e-6 * K;
        const double fK = (fixed_factor_equilibrium(p, ff, K + h, phi).eq.Y -
                           fixed_factor_equilibrium(p, ff, K - h, phi).eq.Y) /
                          (2.0 * h);
        auto ffm = ff;
        ffm.M = ff.M * (1.0 + 1e-6);
        auto ffl = ff;
        ffl.M = ff.M * (1.0 - 1e-6);
        const double fM = (fixed_factor_equilibrium(p, ffm, K, phi).eq.Y -
                           fixed_factor_equilibrium(p, ffl, K, phi).eq.Y) /
                          (2e-6 * ff.M);
        CHECK(e.eq.R == doctest::Approx(fK).epsilon(1e-7));
        CHECK(e.Q == doctest::Approx(fM).epsilon(1e-7));
        CHECK(e.eq.w * p.L + e.eq.R * K + e.Q * ff.M == doctest::Approx(e.eq.Y).epsilon(1e-12));
    }
}

TEST_CASE("fixed factor steady capital equates the return with rho + delta") {
    const EconomyParams p;
    const PreferenceParams prefs;
    const FixedFactorParams ff{0.9, 1e-4};
    const double Ks = fixed_factor_steady_capital(p, prefs, ff);
    double lo = 1e-9, hi = 1e9;
    for (int i = 0; i < 300; ++i) {
        const double mid = std::sqrt(lo * hi);
        (fixed_factor_equilibrium(p, ff, mid, AutomationShare::from_unautomated(0.0)).eq.R > 0.14 ? lo : hi) = mid;
    }
    CHECK(Ks == doctest::Approx(lo).epsilon(1e-9));
    const double M = fixed_factor_quantity_for(p, prefs, 0.9, 4.6);
    CHECK(fixed_factor_steady_capital(p, prefs, FixedFactorParams{0.9, M}) == doctest::Approx(4.6).epsilon(1e-12));
}

TEST_CASE("fixed factor convergence to the steady state") {
    const EconomyParams p;
    const PreferenceParams prefs;
    const FixedFactorParams ff{0.5, 1.0};
    const double Ks = fixed_factor_steady_capital(p, prefs, ff);
    const auto cal = calibrate_power(0.608, 5.0);
    SolverSettings s;
    s.horizon = 200.0;
    const auto traj = simulate_fixed_factor(cal.dist, cal.path, p, prefs, ff, RamseyPolicy{}, s, 4.6);
    CHECK(traj.points.back().K == doctest::Approx(Ks).epsilon(0.01));
}

TEST_CASE("singularity condition") {
    const auto a = singularity_condition(0.7, 0.5, 0.2);
    CHECK(a.ratio == doctest::Approx(0.5 / (0.3 * 0.8)).epsilon(1e-15));
    CHECK(a.triggered);
    CHECK_FALSE(singularity_condition(0.3, 0.2, 0.2).triggered);
    CHECK_FALSE(singularity_condition(0.5, 0.4, 0.2).triggered);
    CHECK_THROWS_AS(singularity_condition(0.5, 0.5, 1.0), DomainError);
}

TEST_CASE("two-sector run accelerates only above the threshold") {
    const auto cal = calibrate_pareto(0.608, 0.01);
    RndParams rnd;
    rnd.theta = 0.2;
    SolverSettings s;
    s.horizon = 50.0;
    rnd.frozen = std::pair{0.7, 0.5};
    const auto hot = simulate_two_sector(rnd, cal.dist, cal.path, s, 4.6);
    REQUIRE(hot.blowup_time);
    REQUIRE(hot.tech.size() == hot.trajectory.points.size());
    for (std::size_t i = 1; i < hot.tech.size(); ++i) CHECK(hot.tech[i] > hot.tech[i - 1]);
    rnd.frozen = std::pair{0.3, 0.2};
    const auto cold = simulate_two_sector(rnd, cal.dist, cal.path, s, 4.6);
    CHECK_FALSE(cold.blowup_time);
    CHECK(cold.tech_growth.back() < 0.5);
}

TEST_CASE("nostalgic cap never automates more than the frontier") {
    const auto cal = calibrate_power(0.608, 20.0);
    const double cap = 0.09;
    const auto bind = nostalgic_bind_time(cal.dist, cal.path, cap, 100.0);
    REQUIRE(bind);
    for (double t : {0.0, 5.0, 10.0, *bind - 0.01, *bind + 0.01, 30.0, 80.0}) {
        const auto capped = nostalgic_share(cal.dist, cal.path, cap, t);
        const auto free = share_at_time(cal.dist, cal.path, t);
        CHECK(capped.automated <= free.automated + 1e-15);
        CHECK(capped.unautomated >= 0.392 * std::exp(-cap * t) * (1.0 - 1e-12));
        if (t < *bind) CHECK(capped.automated == doctest::Approx(free.automated).epsilon(1e-14));
    }
    CHECK_FALSE(nostalgic_bind_time(calibrate_pareto(0.608, 0.01).dist, calibrate_pareto(0.608, 0.01).path, cap,
                                    500.0));
    const std::vector<double> times = {0.0, 50.0};
    CHECK(nostalgic_cap_path(cal.dist, cal.path, cap, times).size() == 2);
}

TEST_CASE("nostalgic run reports a non-negative output gap after binding") {
    const auto cal = calibrate_power(0.608, 20.0);
    SolverSettings s;
    s.horizon = 60.0;
    const auto run = simulate_nostalgic(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, 0.09, RamseyPolicy{}, s,
                                        4.6);
    REQUIRE(run.bind_time);
    REQUIRE(run.output_gap.size() == run.capped.points.size());
    for (std::size_t i = 0; i < run.output_gap.size(); ++i)
        if (run.capped.points[i].t > *run.bind_time + 1.0) CHECK(run.output_gap[i] > 0.0);
}

TEST_CASE("skill wages exhaust output") {
    const EconomyParams p;
    const auto cal = calibrate_pareto(0.608, 0.05);
    const TaskDistribution skills(Pareto{0.005});
    for (double t : {0.0, 20.0, 60.0}) {
        const auto share = share_at_time(cal.dist, cal.path, t);
        const double log_I = cal.path.log_index(t);
        const auto sw = skill_wages(p, skills, 4.6, share, log_I);
        const double ups = sw.substituted;
        CHECK(sw.w_low == p.A);
        CHECK(sw.w_high * p.L * (1.0 - ups) + sw.R * (4.6 + p.L * ups) == doctest::Approx(sw.Y).epsilon(1e-12));
        CHECK(sw.w_high >= sw.R * (1.0 - 1e-12));
    }
}

TEST_CASE("specific capital thresholds and phases") {
    const EconomyParams p;
    SpecificCapitalState st{4.6, 1.0, 0.608, 0.1, 0.0};
    const auto th = specific_capital_thresholds(st);
    CHECK(th.k1 == doctest::Approx(1.0 / (1.0 - 0.708)).epsilon(1e-12));
    CHECK(th.k2 == doctest::Approx(4.6 / 0.608).epsilon(1e-12));
    for (double k : {0.5 * th.k1, 0.5 * (th.k1 + th.k2), 2.0 * th.k2}) {
        st.k_spec = k;
        const auto r = specific_capital_returns(p, st);
        CHECK(r.phase == (k < th.k1 ? 1 : (k < th.k2 ? 2 : 3)));
        if (r.phase == 3) CHECK(r.R_traditional == doctest::Approx(r.R_specific).epsilon(1e-12));
    }
    st.k_spec = 0.0;
    const auto base = static_equilibrium(p, 4.6, 0.608);
    const auto r0 = specific_capital_returns(p, st);
    CHECK(r0.Y == doctest::Approx(base.Y).epsilon(1e-12));
    CHECK(r0.w == doctest::Approx(base.w).epsilon(1e-12));
    st.K = 0.5;
    CHECK_THROWS_AS(specific_capital_thresholds(st), DomainError);
}
