#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "hubrank/topk.hpp"

using namespace hubrank;

static void BM_IdentifyTopK(benchmark::State& state)
{
    const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 5.0);
    TopKOptions opts;
    opts.side = Side::authority;
    std::size_t iterations = 0;
    for (auto _ : state) {
        const TopKReport r = identify_top_k(g, 10, opts);
        iterations = r.total_iterations();
        benchmark::DoNotOptimize(r.members.data());
    }
    state.counters["lanczos_steps"] = static_cast<double>(iterations);
}
BENCHMARK(BM_IdentifyTopK)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_RankInTopM(benchmark::State& state)
{
    const auto g = bench::random_graph(2000, 5.0);
    TopKOptions opts;
    opts.side = Side::hub;
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const TopKReport r = rank_in_top_m(g, 10, m, opts);
        benchmark::DoNotOptimize(r.members.data());
    }
}
BENCHMARK(BM_RankInTopM)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);
