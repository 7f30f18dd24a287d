#include <benchmark/benchmark.h>

#include "fuzzfrac/fracalc.hpp"
#include "fuzzfrac/verifier.hpp"

using namespace fuzzfrac;

namespace {

const AlphaGrid kGrid(101);

FuzzyNumber tri123() { return FuzzyNumber::triangular(1.0, 2.0, 3.0, kGrid); }

void BM_fuzzy_add(benchmark::State& state) {
    const FuzzyNumber x = tri123();
    const FuzzyNumber y = FuzzyNumber::triangular(0.0, 1.0, 2.0, kGrid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(add(x, y));
    }
}
BENCHMARK(BM_fuzzy_add);

void BM_scalar_mul(benchmark::State& state) {
    const FuzzyNumber x = tri123();
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_mul(-1.7, x));
    }
}
BENCHMARK(BM_scalar_mul);

void BM_eval_power_func(benchmark::State& state) {
    const FuzzyPowerFunc u = example2_solution(0.88, tri123());
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(u, 0.2));
    }
}
BENCHMARK(BM_eval_power_func);

void BM_rl_integral_numeric(benchmark::State& state) {
    const FuzzyPowerFunc u(kGrid, {PowerTerm{tri123(), -0.5}});
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rl_integral_numeric(u, 0.5, 1.0, nodes));
    }
}
BENCHMARK(BM_rl_integral_numeric)->Arg(1000)->Arg(10000);

void BM_volterra_quadrature(benchmark::State& state) {
    const FuzzyPowerFunc u(kGrid, {PowerTerm{tri123(), -0.3}});
    const int nodes = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(volterra(u, Kernel::one(), 0.32, nodes));
    }
}
BENCHMARK(BM_volterra_quadrature)->Arg(1000)->Arg(10000);

void BM_residual_exact_path(benchmark::State& state) {
    const FuzzyNumber c = tri123();
    const IVPProblem problem = make_example1_problem(0.5, c);
    const FuzzyPowerFunc u = example1_solution(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residual(problem, u, 0.3));
    }
}
BENCHMARK(BM_residual_exact_path);

void BM_verify_solution_preset1(benchmark::State& state) {
    const FuzzyNumber c = tri123();
    const IVPProblem problem = make_example1_problem(0.5, c);
    const FuzzyPowerFunc u = example1_solution(c);
    VerifyConfig config;
    config.t_points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_solution(problem, u, config));
    }
}
BENCHMARK(BM_verify_solution_preset1)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
