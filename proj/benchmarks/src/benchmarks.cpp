#include <benchmark/benchmark.h>

#include "symprod/cycle_types.hpp"
#include "symprod/genera.hpp"
#include "symprod/oracles.hpp"
#include "symprod/orbifold.hpp"
#include "symprod/spaces.hpp"

namespace {

using namespace symprod;

void BM_MacdonaldSeries(benchmark::State& state) {
    const GradedSpace space = resolve(ClosedSurface{2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(macdonald_series(space, 8, 8));
    }
}
BENCHMARK(BM_MacdonaldSeries);

void BM_SymPowerOracle(benchmark::State& state) {
    const GradedSpace space = resolve(ClosedSurface{1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_power_dims_oracle(space, 6, 12));
    }
}
BENCHMARK(BM_SymPowerOracle);

void BM_ChiYCycleIndex(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(cycle_index_genus(chi_y_seed(3), 10));
    }
}
BENCHMARK(BM_ChiYCycleIndex);

void BM_Dmvv(benchmark::State& state) {
    const EllCoefficients coeffs = {
        {{0, -1}, 1}, {{0, 0}, 2}, {{1, 1}, -3},
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(dmvv_series(coeffs, 8, 8, -8, 8));
    }
}
BENCHMARK(BM_Dmvv);

void BM_PermTraceOracle(benchmark::State& state) {
    const GradedSpace space(std::vector<long long>{1, 2, 1});
    const auto types = cycle_types(4);
    for (auto _ : state) {
        long long total = 0;
        for (const CycleType& sigma : types) {
            total += graded_perm_trace_oracle(space, sigma);
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PermTraceOracle);

void BM_OrbifoldEuler(benchmark::State& state) {
    const GradedSpace sphere = resolve(Sphere{2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbifold_euler_bruteforce(sphere, 8));
    }
}
BENCHMARK(BM_OrbifoldEuler);

}  // namespace

BENCHMARK_MAIN();
