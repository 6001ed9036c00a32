#include <benchmark/benchmark.h>

#include <vector>

#include "taskecon/dynamics.hpp"
#include "taskecon/kernels.hpp"

using namespace taskecon;

namespace {

std::vector<AutomationShare> shares(std::size_t n) {
    std::vector<AutomationShare> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(AutomationShare::from_automated(0.999 * i / n));
    return out;
}

template <bool Parallel>
void equilibrium_sweep(benchmark::State& state) {
    const auto s = shares(static_cast<std::size_t>(state.range(0)));
    const EconomyParams p;
    for (auto _ : state) {
        auto r = Parallel ? parallel::equilibrium_sweep(p, 4.6, s) : serial::equilibrium_sweep(p, 4.6, s);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void bucket_sum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> m(n, 1.0 / n), x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * i;
    for (auto _ : state) {
        double v = Parallel ? parallel::bucket_ces_sum(m, x, -1.0) : serial::bucket_ces_sum(m, x, -1.0);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void fpf(benchmark::State& state) {
    const EconomyParams p;
    const auto share = AutomationShare::from_automated(0.608);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? parallel::fpf_curve(p, share, n) : serial::fpf_curve(p, share, n);
        benchmark::DoNotOptimize(r.data());
    }
}

template <bool Parallel>
void oracle(benchmark::State& state) {
    OracleOptions opts;
    opts.parallel = Parallel;
    const auto share = AutomationShare::from_automated(0.608);
    for (auto _ : state) {
        auto eq = oracle_equilibrium(EconomyParams{}, 4.6, share, static_cast<std::size_t>(state.range(0)), opts);
        benchmark::DoNotOptimize(eq.Y);
    }
}

template <bool Parallel>
void scenario_batch(benchmark::State& state) {
    SolverSettings s;
    s.horizon = 50.0;
    const auto n = static_cast<std::size_t>(state.range(0));
    auto one = [&](std::size_t i) {
        const auto cal = calibrate_pareto(0.608, 0.01 + 0.01 * i);
        return simulate(cal.dist, cal.path, EconomyParams{}, PreferenceParams{}, ConstantSavings{0.3}, s, 4.6)
            .points.back()
            .K;
    };
    for (auto _ : state) {
        auto r = Parallel ? parallel::map_indexed(n, one) : serial::map_indexed(n, one);
        benchmark::DoNotOptimize(r.data());
    }
}

}  // namespace

BENCHMARK(equilibrium_sweep<false>)->Arg(1 << 16);
BENCHMARK(equilibrium_sweep<true>)->Arg(1 << 16);
BENCHMARK(bucket_sum<false>)->Arg(1 << 20);
BENCHMARK(bucket_sum<true>)->Arg(1 << 20);
BENCHMARK(fpf<false>)->Arg(1 << 14);
BENCHMARK(fpf<true>)->Arg(1 << 14);
BENCHMARK(oracle<false>)->Arg(4000);
BENCHMARK(oracle<true>)->Arg(4000);
BENCHMARK(scenario_batch<false>)->Arg(8);
BENCHMARK(scenario_batch<true>)->Arg(8);

BENCHMARK_MAIN();
