#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "hubrank/expm.hpp"
#include "hubrank/lanczos.hpp"
#include "hubrank/quadrature.hpp"

using namespace hubrank;

static void BM_Spmv(benchmark::State& state)
{
    const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 4.0);
    std::vector<double> x(g.node_count(), 1.0), y(g.node_count());
    for (auto _ : state) {
        spmv(g, x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.edge_count()));
}
BENCHMARK(BM_Spmv)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_Lanczos(benchmark::State& state)
{
    const auto g = bench::random_graph(10000, 4.0);
    const BipartiteOperator op(g);
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        LanczosProcess proc(op, 0, 1e-12);
        proc.extend_to(p);
        benchmark::DoNotOptimize(proc.steps());
    }
}
BENCHMARK(BM_Lanczos)->Arg(5)->Arg(10)->Arg(20);

static void BM_RadauBounds(benchmark::State& state)
{
    const auto g = bench::random_graph(10000, 4.0);
    const BipartiteOperator op(g);
    const SpectrumInterval iv = spectrum_interval(g);
    const auto p = static_cast<std::size_t>(state.range(0));
    std::size_t node = 0;
    for (auto _ : state) {
        const NodeBounds b = radau_bounds(op, node, p, iv, MatrixFunction::exponential());
        benchmark::DoNotOptimize(b.lower);
        node = (node + 97) % op.dim();
    }
}
BENCHMARK(BM_RadauBounds)->Arg(3)->Arg(7)->Arg(15);

static void BM_DenseExpm(benchmark::State& state)
{
    const auto g = bench::random_graph(static_cast<std::size_t>(state.range(0)), 3.0);
    const Eigen::MatrixXd m = BipartiteOperator(g).to_dense();
    for (auto _ : state) {
        const Eigen::MatrixXd e = dense_expm(m);
        benchmark::DoNotOptimize(e.data());
    }
}
BENCHMARK(BM_DenseExpm)->Arg(50)->Arg(200)->Arg(500);
