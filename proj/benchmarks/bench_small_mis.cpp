#include <benchmark/benchmark.h>

#include <chromdp/generators.hpp>
#include <chromdp/mis_enum.hpp>

using namespace chromdp;

// Worst-case family: a triangles and b K4s with k = a + b.
static void BM_SmallMisTightness(benchmark::State & state)
{
    auto a = static_cast<int>(state.range(0));
    auto b = static_cast<int>(state.range(1));
    auto g = gen_triangles_k4s(a, b);
    EnumStats stats;
    for (auto _ : state) {
        std::uint64_t seen = 0;
        stats = small_mis(g, g.vertices(), a + b, [&](VertexSet) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
    state.counters["calls"] = static_cast<double>(stats.recursive_calls);
    state.counters["emitted"] = static_cast<double>(stats.emitted_sets);
}
BENCHMARK(BM_SmallMisTightness)->Args({4, 0})->Args({0, 3})->Args({2, 2})->Args({4, 3})->Args({2, 5});

static void BM_SmallMisRandom(benchmark::State & state)
{
    auto n = static_cast<int>(state.range(0));
    auto g = gen_gnp(n, 0.3, 17, VertexSet::max_vertices);
    for (auto _ : state) {
        std::uint64_t seen = 0;
        small_mis(g, g.vertices(), n / 3, [&](VertexSet) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_SmallMisRandom)->DenseRange(20, 40, 10);
