#pragma once

#include <random>
#include <vector>

#include "hubrank/graph.hpp"

namespace hubrank::bench {

// Sparse random digraph with roughly avg_degree out-edges per node.
inline DirectedGraph random_graph(std::size_t n, double avg_degree, std::uint64_t seed = 7)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    std::vector<Edge> edges;
    const auto m = static_cast<std::size_t>(avg_degree * static_cast<double>(n));
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const NodeId i = pick(rng);
        const NodeId j = pick(rng);
        if (i != j) {
            edges.push_back({i, j, 1.0});
        }
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

} // namespace hubrank::bench
