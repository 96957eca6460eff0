#include "nullprop/nullprop.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace nullprop;

namespace
{

std::vector<double> null_sample(std::int64_t n, std::uint64_t seed)
{
    Stream stream(seed, 0);
    std::vector<double> u(static_cast<std::size_t>(n));
    sorted_uniforms(stream, u);
    return u;
}

void BM_weighted_sup_stat(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const auto u = null_sample(n, 11);
    const Interval interval = Interval::truncated(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(weighted_sup_stat(u, DeltaKind::stddev, interval));
    state.SetComplexityN(n);
}
BENCHMARK(BM_weighted_sup_stat)->RangeMultiplier(10)->Range(100, 1000000)->Complexity(benchmark::oN);

void BM_estimate_lambda(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const PValueSample sample = PValueSample::from_sorted(null_sample(n, 12));
    EstimateConfig config;
    config.delta = DeltaKind::stddev;
    const double beta = gumbel_beta(n, 0.05);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_lambda_with_beta(sample, config, beta).lambda_hat);
    state.SetComplexityN(n);
}
BENCHMARK(BM_estimate_lambda)->RangeMultiplier(10)->Range(100, 1000000)->Complexity(benchmark::oN);

void BM_sorted_uniforms(benchmark::State& state)
{
    std::vector<double> u(static_cast<std::size_t>(state.range(0)));
    std::uint64_t rep = 0;
    for (auto _ : state)
    {
        Stream stream(13, rep++);
        sorted_uniforms(stream, u);
        benchmark::DoNotOptimize(u.data());
    }
}
BENCHMARK(BM_sorted_uniforms)->Arg(1000)->Arg(100000);

void BM_calibrate(benchmark::State& state)
{
    CalibrationRequest request;
    request.n = state.range(0);
    request.delta = DeltaKind::stddev;
    request.interval = Interval::truncated(request.n);
    request.replicates = 1000;
    request.seed = 14;
    for (auto _ : state)
        benchmark::DoNotOptimize(calibrate_beta(request, 1).beta);
}
BENCHMARK(BM_calibrate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_subbotin_sf(benchmark::State& state)
{
    const double kappa = static_cast<double>(state.range(0)) / 2.0;
    double x = -3.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(subbotin_sf(kappa, x));
        x = x > 8.0 ? -3.0 : x + 0.013;
    }
}
BENCHMARK(BM_subbotin_sf)->Arg(1)->Arg(2)->Arg(4)->Arg(3);

} // namespace

BENCHMARK_MAIN();
