#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "hubrank/graph.hpp"

namespace hubrank::testing {

// Small graphs with known scores. Edges are 0-based.
DirectedGraph example1();
DirectedGraph example2();
DirectedGraph example3();
DirectedGraph directed_path(std::size_t n);
DirectedGraph two_cycle();

/// Erdos-Renyi digraph without self-loops.
DirectedGraph random_digraph(std::uint64_t seed, std::size_t n, double edge_prob);

/// The fixed suite of 50 random digraphs with n <= 40 and edge probability
/// in [0.1, 0.5] shared by the property and acceptance tests.
std::vector<DirectedGraph> random_suite();

/// Uniformly random permutation of [0, n).
std::vector<NodeId> random_permutation(std::uint64_t seed, std::size_t n);

std::filesystem::path data_dir();

inline const std::vector<double> kExample1ExpHub{2.3319, 2.2289, 2.2812, 1.6414};
inline const std::vector<double> kExample1ExpAuthority{1.5906, 3.0209, 2.2796, 1.5922};
inline const std::vector<double> kExample1HitsHub{0.3383, 0.1729, 0.2798, 0.2091};
inline const std::vector<double> kExample1HitsAuthority{0.0965, 0.4618, 0.2854, 0.1562};
inline const std::vector<double> kExample2ExpHub{1.5431, 2.1782, 1.5891, 1.5891};
inline const std::vector<double> kExample2ExpAuthority{1.5891, 2.1782, 1.5431, 1.5891};
inline const std::vector<double> kExample2HitsHub{0.0, 0.5, 0.25, 0.25};
inline const std::vector<double> kExample2HitsAuthority{1.0 / 3, 1.0 / 3, 0.0, 1.0 / 3};
inline const std::vector<double> kExample3ExpHub{1.0, 1.6905, 1.6905, 1.6905, 1.6905, 3.7622};
inline const std::vector<double> kExample3ExpAuthority{3.7622, 1.6905, 1.6905, 1.6905, 1.6905, 1.0};

} // namespace hubrank::testing
