#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hubrank::testing {
namespace {

DirectedGraph from_one_based(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs)
{
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        edges.push_back({u - 1, v - 1, 1.0});
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

} // namespace

DirectedGraph example1()
{
    return from_one_based(4, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 2}});
}

DirectedGraph example2()
{
    return from_one_based(4, {{1, 3}, {2, 1}, {2, 4}, {3, 2}, {4, 2}});
}

DirectedGraph example3()
{
    return from_one_based(6, {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}});
}

DirectedGraph directed_path(std::size_t n)
{
    std::vector<Edge> edges;
    for (NodeId i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1, 1.0});
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph two_cycle()
{
    return DirectedGraph::from_edges(2, {{0, 1, 1.0}, {1, 0, 1.0}});
}

DirectedGraph random_digraph(std::uint64_t seed, std::size_t n, double edge_prob)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (i != j && coin(rng)) {
                edges.push_back({i, j, 1.0});
            }
        }
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

std::vector<DirectedGraph> random_suite()
{
    std::vector<DirectedGraph> suite;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> size(5, 40);
    std::uniform_real_distribution<double> prob(0.1, 0.5);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = size(rng);
        const double p = prob(rng);
        suite.push_back(random_digraph(rng(), n, p));
    }
    return suite;
}

std::vector<NodeId> random_permutation(std::uint64_t seed, std::size_t n)
{
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

std::filesystem::path data_dir()
{
    return HUBRANK_TEST_DATA_DIR;
}

} // namespace hubrank::testing
