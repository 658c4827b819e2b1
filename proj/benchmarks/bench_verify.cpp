#include <benchmark/benchmark.h>

#include "genbeam/family.hpp"
#include "genbeam/verify.hpp"

using namespace genbeam;

static void BM_KGResidual(benchmark::State& state)
{
    FamilySpec spec;
    spec.id = FamilyId::lg;
    spec.params.lg = {2, 3};
    const ComplexField f = make_field(spec);
    const FDSpec fd{static_cast<int>(state.range(0)), 1e-2};
    const SpacetimePoint p{0.3, 0.9, -0.2, 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(kg_residual(f, p, spec.mass(), fd));
}
BENCHMARK(BM_KGResidual)->Arg(2)->Arg(4)->Arg(8);

static void BM_VerifyFamily(benchmark::State& state)
{
    const auto id = static_cast<FamilyId>(state.range(0));
    Rng rng(11);
    const FamilySpec spec = random_family_spec(id, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_family(spec, 20, 42));
    state.SetLabel(std::string(family_name(id)));
}
BENCHMARK(BM_VerifyFamily)
    ->Arg(static_cast<int>(FamilyId::lg))
    ->Arg(static_cast<int>(FamilyId::exp))
    ->Arg(static_cast<int>(FamilyId::g_md))
    ->Arg(static_cast<int>(FamilyId::bg))
    ->Unit(benchmark::kMillisecond);
