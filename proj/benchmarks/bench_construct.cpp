#include <benchmark/benchmark.h>

#include "genbeam/beams.hpp"
#include "genbeam/construct.hpp"

using namespace genbeam;

namespace {
const BeamPhysical phys{4.0, 1.0, 1.2};
const SpacetimePoint point{0.7, 1.1, -0.6, 0.4};
} // namespace

static void BM_ClosedFormLG(benchmark::State& state)
{
    const LGIndices idx{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(f_lg(idx, point, phys));
}
BENCHMARK(BM_ClosedFormLG)->Args({0, 0})->Args({2, 2})->Args({4, 4});

static void BM_RodriguesLG(benchmark::State& state)
{
    const LGIndices idx{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(rodrigues_lg(idx, point, phys));
}
BENCHMARK(BM_RodriguesLG)->Args({1, 0})->Args({2, 2})->Args({4, 4})->Unit(benchmark::kMicrosecond);

static void BM_RodriguesHG(benchmark::State& state)
{
    const HGIndices idx{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(rodrigues_hg(idx, point, phys));
}
BENCHMARK(BM_RodriguesHG)->Args({1, 1})->Args({3, 3})->Args({6, 6})->Unit(benchmark::kMicrosecond);

static void BM_CauchyFixed(benchmark::State& state)
{
    const int nodes = static_cast<int>(state.range(0));
    auto f = [](cplx z) { return std::exp(z); };
    for (auto _ : state)
        benchmark::DoNotOptimize(cauchy_derivative(f, cplx(0.2, 0.1), 6, 1.0, nodes));
}
BENCHMARK(BM_CauchyFixed)->Arg(32)->Arg(64)->Arg(128);

static void BM_BesselQuadrature(benchmark::State& state)
{
    const QuadratureSpec spec{static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(bessel_from_quadrature({1.3, 0.4, 3}, point, 1.0, spec));
}
BENCHMARK(BM_BesselQuadrature)->Arg(64)->Arg(256)->Arg(1024);

static void BM_BGQuadrature(benchmark::State& state)
{
    const QuadratureSpec spec{static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(bg_from_quadrature({1.1, 2}, point, phys, spec));
}
BENCHMARK(BM_BGQuadrature)->Arg(64)->Arg(256)->Arg(1024);
