#include <benchmark/benchmark.h>

#include <chromdp/chromatic.hpp>
#include <chromdp/generators.hpp>

using namespace chromdp;

static void BM_ChromaticGnp(benchmark::State & state)
{
    auto n = static_cast<int>(state.range(0));
    auto g = gen_gnp(n, 0.5, 20);
    int chi = 0;
    for (auto _ : state) {
        chi = chromatic_number(g).chi;
        benchmark::DoNotOptimize(chi);
    }
    state.counters["chi"] = chi;
    state.SetComplexityN(n);
}
BENCHMARK(BM_ChromaticGnp)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

static void BM_ExtractColoring(benchmark::State & state)
{
    auto g = gen_gnp(static_cast<int>(state.range(0)), 0.5, 20);
    auto dp = chromatic_number(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_coloring(g, dp.table));
}
BENCHMARK(BM_ExtractColoring)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ChiAtMost3(benchmark::State & state)
{
    auto g = gen_gnp(static_cast<int>(state.range(0)), 0.25, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(chi_at_most_3(g, g.vertices()));
}
BENCHMARK(BM_ChiAtMost3)->Arg(16)->Arg(24);
