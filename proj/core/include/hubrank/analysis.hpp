#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hubrank/graph.hpp"
#include "hubrank/rank_table.hpp"

namespace hubrank {

struct ComparisonReport {
    std::string method_a;
    std::string method_b;
    double kendall_tau_b = 1.0;
    std::vector<std::size_t> ks;
    std::vector<double> overlap;  // overlap[t] is the overlap at ks[t]
    std::vector<std::vector<NodeId>> top_a;
    std::vector<std::vector<NodeId>> top_b;
};

/**
 * Kendall's tau-b with ties taken from the tables' tie groups. When one
 * ranking is entirely tied the coefficient is undefined; it is reported as
 * 1 if both are entirely tied and 0 otherwise.
 */
double kendall_tau_b(const RankTable& a, const RankTable& b);

/**
 * |top_k(a) ∩ top_k(b)| / k, where a tie group straddling position k
 * counts each of its members with weight (slots it fills) / (group size),
 * and a node counts min(weight in a, weight in b).
 */
double overlap_at_k(const RankTable& a, const RankTable& b, std::size_t k);

/// Throws ParameterError if the tables cover different node counts or some k is outside [1, n].
ComparisonReport compare(const RankTable& a, const RankTable& b, std::span<const std::size_t> ks);

struct GapReport {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double relative_gap = 0.0;  // (sigma1 - sigma2) / sigma1, in [0, 1]
    bool degenerate = false;
    bool converged = true;
    std::string annotation;
};

/// Relative gap below which the leading singular value counts as repeated.
inline constexpr double kDegenerateGap = 1e-8;
/// Relative gap above which HITS and the exponential ranking usually agree.
inline constexpr double kWideGap = 0.05;

GapReport spectral_gap(const DirectedGraph& g);

/// Fraction of edges (i, j) whose reverse (j, i) is also an edge; 0 without edges.
double symmetry_fraction(const DirectedGraph& g);

/// Trace of the bipartite exponential, 2 * sum cosh(sigma_i), from a dense
/// SVD of A. Throws ParameterError when n > kDenseThreshold.
double estrada_index(const DirectedGraph& g);

/// Eigenvalues of the Jacobi matrix after p Lanczos steps on the bipartite
/// operator from the normalized ones vector, ascending.
std::vector<double> ritz_values(const DirectedGraph& g, std::size_t p);

} // namespace hubrank
