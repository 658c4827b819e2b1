#include <benchmark/benchmark.h>

#include "genbeam/specfun.hpp"

using namespace genbeam;

static void BM_Laguerre(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    cplx z(3.2, -1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre(n, 3, z));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_Laguerre)->Arg(2)->Arg(8)->Arg(16);

static void BM_Hermite(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    cplx z(1.4, 0.3);
    for (auto _ : state)
        benchmark::DoNotOptimize(hermite(m, z));
}
BENCHMARK(BM_Hermite)->Arg(2)->Arg(6)->Arg(12);

// small |z| takes the series, large |z| the backward recurrence
static void BM_BesselJ(benchmark::State& state)
{
    const cplx z(static_cast<double>(state.range(0)), 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(bessel_j(3, z));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(7)->Arg(20)->Arg(60);

static void BM_MacdonaldK1(benchmark::State& state)
{
    const cplx z(0.25 * static_cast<double>(state.range(0)), 0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(macdonald_k1(z));
}
BENCHMARK(BM_MacdonaldK1)->Arg(2)->Arg(8)->Arg(40);
