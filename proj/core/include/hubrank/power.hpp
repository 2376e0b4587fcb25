#pragma once

#include <cstddef>
#include <vector>

#include "hubrank/graph.hpp"

namespace hubrank {

/// Leading singular values of A from power iteration on A^T A.
struct SpectralEstimate {
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    /// ||A^T A v - sigma1^2 v|| for the returned right singular vector.
    double residual = 0.0;
    std::vector<double> right;  // unit, length n
    std::vector<double> left;   // unit, length n (A v / sigma1)
};

/**
 * sigma1 by power iteration on A^T A started from the normalized ones
 * vector; sigma2 by a second run deflated against the converged right
 * singular vector. Convergence is declared when successive unit iterates
 * differ by less than tol in the 2-norm. A zero matrix returns sigma1 = 0.
 */
SpectralEstimate power_singular_pair(const DirectedGraph& g, double tol = 1e-10, std::size_t max_iter = 100000);

struct SpectralRadius {
    double value = 0.0;
    bool converged = false;
    /// value is the fallback min(max out-degree * max weight, sigma1), not an estimate.
    bool is_bound = false;
    std::size_t iterations = 0;
};

/**
 * Perron root of nonnegative A by power iteration on A + I with 1-norm
 * normalization (the shift removes periodic oscillation). Falls back to a
 * conservative upper bound, flagged, when the iteration does not settle
 * within max_iter. Acyclic (nilpotent) graphs return exactly 0.
 */
SpectralRadius spectral_radius(const DirectedGraph& g, double tol = 1e-12, std::size_t max_iter = 20000);

} // namespace hubrank
