#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hubrank/graph.hpp"

// Reference values computed with dense Eigen factorizations, kept apart from
// the library's own numerical code paths.
namespace hubrank::testing {

/// A assembled from the edge list.
Eigen::MatrixXd adjacency(const DirectedGraph& g);

/// [[0, A], [A^T, 0]].
Eigen::MatrixXd bipartite(const Eigen::MatrixXd& a);

/// e^M for symmetric M from a self-adjoint eigendecomposition.
Eigen::MatrixXd expm_symmetric(const Eigen::MatrixXd& m);

/// e^M for general M (Eigen's unsupported MatrixFunctions module).
Eigen::MatrixXd expm_general(const Eigen::MatrixXd& m);

struct DiagonalPair {
    std::vector<double> hub;
    std::vector<double> authority;
};

/// Diagonal blocks of e^calA from the eigendecomposition of calA.
DiagonalPair exp_diagonals(const DirectedGraph& g);

/// Diagonals of (I - c^2 AA^T)^{-1} and (I - c^2 A^TA)^{-1} through the
/// eigendecompositions of AA^T and A^TA.
DiagonalPair resolvent_diagonals(const DirectedGraph& g, double c);

/// Singular values of A, descending.
std::vector<double> singular_values(const DirectedGraph& g);

/// Dominant eigenvectors of AA^T and A^TA (nonnegative, sum one).
DiagonalPair hits_scores(const DirectedGraph& g);

/// (I - cA)^{-1} 1 and (I - cA^T)^{-1} 1 by full-pivot LU.
DiagonalPair katz_scores(const DirectedGraph& g, double c);

/// Stationary vector of the Google matrix by solving the linear system.
std::vector<double> pagerank(const DirectedGraph& g, double alpha);

/// Largest eigenvalue modulus of A.
double spectral_radius(const DirectedGraph& g);

std::vector<double> to_std(const Eigen::VectorXd& v);

} // namespace hubrank::testing
