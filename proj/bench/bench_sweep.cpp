#include <benchmark/benchmark.h>

#include "svlab/sweep.hpp"

using namespace svlab;

namespace {

sweep::SweepRequest box(long width)
{
    sweep::SweepRequest r;
    r.p = 3;
    r.g = 4;
    r.e = -2;
    r.c = make_rational(1, 2);
    r.x = 3;
    r.y = -6;
    r.a_min = 0;
    r.a_max = width - 1;
    r.b_min = -10;
    r.b_max = 10 + 4 * width;
    return r;
}

void BM_SweepSerial(benchmark::State & state)
{
    auto req = box(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep::run_serial(req));
    state.SetItemsProcessed(state.iterations() * sweep::run_serial(req).total);
}

void BM_SweepParallel(benchmark::State & state)
{
    auto req = box(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep::run_parallel(req, static_cast<int>(state.range(1))));
    state.SetItemsProcessed(state.iterations() * sweep::run_serial(req).total);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(6)->Arg(24)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{6, 24, 64}, {0, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
