#include <benchmark/benchmark.h>

#include <random>

#include "cyclab/experiments.hpp"
#include "cyclab/sampling.hpp"
#include "cyclab/wronskian.hpp"
#include "cyclab/zero_counter.hpp"

using namespace cyclab;

namespace {

Jet random_jet(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<Complex> c(n + 1);
    for (auto& x : c) x = {g(rng), g(rng)};
    return Jet(std::move(c));
}

void BM_JetMul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Jet a = random_jet(rng, n), b = random_jet(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JetMul)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_JetExp(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Jet a = random_jet(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exp(a));
}
BENCHMARK(BM_JetExp)->Arg(64)->Arg(128);

void BM_WronskianTable(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    Engine rng = sample_engine(3, 0);
    const ExpPolyParams l = sample_params({m, 2, 2}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(wronskian_table(l));
}
BENCHMARK(BM_WronskianTable)->DenseRange(1, 4);

void BM_CountZeros(benchmark::State& state) {
    Engine rng = sample_engine(4, 0);
    const ExpPolyParams l = sample_params({3, 2, 2}, rng);
    ZeroCountOptions opts;
    opts.run_oracle = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(count_zeros(l, Disk{0.0, 0.5}, opts));
}
BENCHMARK(BM_CountZeros)->Arg(0)->Arg(1);

void BM_RolleCheck(benchmark::State& state) {
    Engine rng = sample_engine(5, 0);
    const ExpPolyParams l = sample_params({3, 2, 2}, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rolle_check(l));
}
BENCHMARK(BM_RolleCheck);

}  // namespace

BENCHMARK_MAIN();
