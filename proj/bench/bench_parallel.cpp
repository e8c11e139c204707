// Serial reference against the OpenMP kernels: pattern cells and
// stronger-than candidate testing.
#include "dartcover/constructions.hpp"
#include "dartcover/disconnected.hpp"
#include "dartcover/stronger.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace dartcover;

namespace {

Graph pattern_source()
{
    Graph g = petersen();
    for (int n = 3; n <= 12; ++n)
        g = disjoint_union(g, cycle(n));
    g = disjoint_union(g, complete(4));
    g = disjoint_union(g, complete_bipartite(3, 3));
    return g;
}

Graph pattern_target()
{
    Graph h = build_F(3, 0);
    for (const Graph& x : {build_F(1, 1), build_F(0, 1), build_F(2, 0), build_W(0, 0, 3, 0, 0), cycle(3)})
        h = disjoint_union(h, x);
    return h;
}

void BM_pattern_serial(benchmark::State& state)
{
    const Graph g = pattern_source(), h = pattern_target();
    const auto decider = default_cell_decider();
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pattern_serial(g, h, decider));
}

void BM_pattern_parallel(benchmark::State& state)
{
    const Graph g = pattern_source(), h = pattern_target();
    const auto decider = default_cell_decider();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pattern(g, h, decider, jobs));
}

void BM_stronger_serial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_stronger_serial(build_F(3, 0), build_F(1, 1), n));
}

void BM_stronger_parallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_stronger(build_F(3, 0), build_F(1, 1), n, jobs));
}

}  // namespace

BENCHMARK(BM_pattern_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pattern_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stronger_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stronger_parallel)->Args({10, 1})->Args({12, 1})->Args({12, 2})->Args({12, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
