#include <doctest.h>

#include <cmath>
#include <random>

#include "taskecon/analysis.hpp"
#include "taskecon/extensions.hpp"
#include "taskecon/scenario.hpp"

using namespace taskecon;

namespace {

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    EconomyParams economy() { return {uniform(0.2, 2.0), uniform(0.1, 0.95), uniform(0.3, 3.0)}; }
};

}  // namespace

TEST_CASE("output is exhausted by factor payments") {
    Sampler s(1);
    for (int i = 0; i < 2000; ++i) {
        const auto p = s.economy();
        const double K = s.log_uniform(1e-3, 1e3);
        const double phi = s.uniform(0.0, 1.0);
        const auto eq = static_equilibrium(p, K, phi);
        CHECK(eq.w * p.L + eq.R * K == doctest::Approx(eq.Y).epsilon(1e-11));
        CHECK(eq.labor_share >= 0.0);
        CHECK(eq.labor_share <= 1.0);
    }
}

TEST_CASE("output is homogeneous of degree one") {
    Sampler s(2);
    for (int i = 0; i < 1000; ++i) {
        auto p = s.economy();
        const double K = s.log_uniform(1e-2, 1e2);
        const double phi = s.uniform(0.01, 0.99);
        const double scale = s.log_uniform(0.1, 10.0);
        const double y = static_equilibrium(p, K, phi).Y;
        p.L *= scale;
        CHECK(static_equilibrium(p, K * scale, phi).Y == doctest::Approx(scale * y).epsilon(1e-11));
    }
}

TEST_CASE("wages rise and returns fall with capital") {
    Sampler s(3);
    for (int i = 0; i < 500; ++i) {
        const auto p = s.economy();
        const double phi = s.uniform(0.05, 0.95);
        const double K = s.log_uniform(1e-2, 1e2);
        const auto a = static_equilibrium(p, K, phi);
        const auto b = static_equilibrium(p, K * 1.01, phi);
        if (a.region == Region::One) {
            CHECK(b.w >= a.w);
            CHECK(b.R <= a.R);
            if (a.w < 0.999 * limit_wage(p, phi)) CHECK(b.w > a.w);
        } else {
            CHECK(b.w == a.w);
        }
    }
}

TEST_CASE("random region-1 equilibria lie on the factor price frontier") {
    Sampler s(4);
    for (int i = 0; i < 500; ++i) {
        const auto p = s.economy();
        const double phi = s.uniform(0.05, 0.95);
        const double K = kappa(phi) * p.L * (1.0 + s.log_uniform(1e-3, 1e3));
        const auto eq = static_equilibrium(p, K, phi);
        REQUIRE(eq.region == Region::One);
        CHECK(fpf_wage(p, phi, eq.R).w == doctest::Approx(eq.w).epsilon(1e-10));
    }
}

TEST_CASE("capital upper bound moves with automation") {
    Sampler s(5);
    const PreferenceParams prefs;
    for (int i = 0; i < 200; ++i) {
        EconomyParams p = s.economy();
        p.A = s.uniform(0.2, 2.0);
        const double phi = s.uniform(0.05, 0.9);
        const double Kp = capital_upper_bound(p, prefs, phi);
        const auto eq = static_equilibrium(p, Kp, phi);
        if (eq.region == Region::One) CHECK(eq.R == doctest::Approx(prefs.rho + prefs.delta).epsilon(1e-9));
        CHECK(capital_upper_bound(p, prefs, phi + 0.05) > Kp);
    }
}

TEST_CASE("predicted wage growth never exceeds the regional maximum") {
    Sampler s(6);
    for (int i = 0; i < 500; ++i) {
        EconomyParams p = s.economy();
        PreferenceParams prefs{s.uniform(0.01, 0.08), s.uniform(0.5, 4.0), s.uniform(0.0, 0.15)};
        p.A = prefs.rho + prefs.delta + s.uniform(0.05, 1.0);
        const auto [lg, g] = wage_max_rate(p, prefs);
        const double x = s.uniform(0.0, 3.0 * lg);
        CHECK(predicted_wage_growth(p, prefs, x) <= g * (1.0 + 1e-12));
        CHECK(predicted_wage_growth(p, prefs, x) >= 0.0);
    }
}

TEST_CASE("specific capital returns are continuous for random states") {
    Sampler s(7);
    const EconomyParams p;
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        SpecificCapitalState st{s.uniform(2.0, 20.0), 1.0, s.uniform(0.1, 0.7), s.uniform(0.01, 0.2), 0.0};
        SpecificCapitalThresholds th;
        try {
            th = specific_capital_thresholds(st);
        } catch (const std::exception&) {
            continue;
        }
        for (double k : {th.k1, th.k2}) {
            auto lo = st;
            lo.k_spec = k * (1.0 - 1e-13);
            auto hi = st;
            hi.k_spec = k;
            const auto a = specific_capital_returns(p, lo);
            const auto b = specific_capital_returns(p, hi);
            CHECK(std::abs(a.w - b.w) < 1e-8);
            CHECK(std::abs(a.R_traditional - b.R_traditional) < 1e-8);
            CHECK(std::abs(a.R_specific - b.R_specific) < 1e-8);
        }
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("random configs survive a dump and parse") {
    Sampler s(8);
    for (int i = 0; i < 200; ++i) {
        auto spec = preset(preset_names()[i % 4]);
        spec.name = "custom";
        spec.economy.A = s.uniform(0.2, 1.0);
        spec.economy.sigma = s.uniform(0.1, 0.9);
        spec.preferences.rho = s.uniform(0.01, 0.05);
        spec.phi0 = s.uniform(0.1, 0.9);
        spec.K0 = s.log_uniform(0.1, 10.0);
        spec.distribution.omega = s.uniform(0.0, 1.0);
        CHECK(parse_config(dump_config(spec)) == spec);
    }
}
