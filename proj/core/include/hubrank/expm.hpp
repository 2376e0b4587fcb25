#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hubrank/graph.hpp"

namespace hubrank {

/// Largest matrix dimension accepted by dense routines.
inline constexpr std::size_t kDenseThreshold = 4000;

/**
 * Matrix exponential by scaling and squaring with diagonal Padé
 * approximants (degrees 3, 5, 7, 9, 13; degree 13 with scaling by 2^s once
 * the 1-norm exceeds theta_13).
 *
 * Throws ParameterError for non-square input or dimension above
 * kDenseThreshold, NumericalError for non-finite entries.
 */
Eigen::MatrixXd dense_expm(const Eigen::MatrixXd& m);

/// e^M for symmetric M through an eigendecomposition.
Eigen::MatrixXd dense_expm_symmetric(const Eigen::MatrixXd& m);

enum class ExpmActionMethod { taylor, dense };

/**
 * e^A v (or e^{A^T} v) without forming e^A: the matrix is scaled by
 * s = ceil(||A||_1) and s truncated Taylor steps are applied, each stopped
 * once two consecutive terms fall below 2^-53 of the partial sum.
 * The dense method multiplies dense_expm(A) with v.
 */
std::vector<double> expm_action(const DirectedGraph& g, std::span<const double> v,
                                Transpose transpose = Transpose::no,
                                ExpmActionMethod method = ExpmActionMethod::taylor);

} // namespace hubrank
