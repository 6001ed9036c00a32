#pragma once

// Data-parallel kernels. Every kernel exists twice: a plain serial loop kept
// as the reference implementation for tests, and an OpenMP version used by
// the CLI, the sweeps and the acceptance checks. Both must agree (bitwise for
// element-wise maps, to rounding for reductions).

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "taskecon/static_economy.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace taskecon {

struct FrontierPoint {
    double R = 0.0;
    double w = 0.0;
};

/// Row of a static sweep over Phi: output and its split into factor incomes.
struct PhiSweepRow {
    double phi = 0.0;
    double Y = 0.0;
    double wL = 0.0;
    double RK = 0.0;
    Region region = Region::One;
};

namespace serial {

double bucket_ces_sum(std::span<const double> masses, std::span<const double> levels, double exponent);

std::vector<StaticEquilibrium> equilibrium_sweep(const EconomyParams& params, double K,
                                                 std::span<const AutomationShare> shares);

std::vector<FrontierPoint> fpf_curve(const EconomyParams& params, const AutomationShare& share,
                                     std::size_t points);

std::vector<PhiSweepRow> phi_sweep(const EconomyParams& params, double K, std::span<const double> phis);

/// out[i] = fn(i) for i in [0, n), in order.
template <class Fn>
auto map_indexed(std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
    return out;
}

}  // namespace serial

namespace parallel {

int max_threads();

double bucket_ces_sum(std::span<const double> masses, std::span<const double> levels, double exponent);

std::vector<StaticEquilibrium> equilibrium_sweep(const EconomyParams& params, double K,
                                                 std::span<const AutomationShare> shares);

std::vector<FrontierPoint> fpf_curve(const EconomyParams& params, const AutomationShare& share,
                                     std::size_t points);

std::vector<PhiSweepRow> phi_sweep(const EconomyParams& params, double K, std::span<const double> phis);

/// out[i] = fn(i) evaluated concurrently; fn must be safe to call from
/// several threads. Results land in index order, so the output is identical
/// to serial::map_indexed. Exceptions are rethrown on the calling thread
/// (first failing index wins).
template <class Fn>
auto map_indexed(std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace parallel

}  // namespace taskecon
