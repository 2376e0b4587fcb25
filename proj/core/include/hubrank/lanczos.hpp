#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hubrank/graph.hpp"

namespace hubrank {

/// Symmetric tridiagonal matrix with diagonal alpha (size p) and strictly
/// positive off-diagonal beta (size p - 1).
struct JacobiMatrix {
    std::vector<double> alpha;
    std::vector<double> beta;

    std::size_t order() const noexcept { return alpha.size(); }
    Eigen::MatrixXd to_dense() const;
};

/// Nodes (ascending eigenvalues of a Jacobi matrix) and weights (squared
/// first components of the normalized eigenvectors).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/**
 * Golub-Welsch: eigenvalues of J by implicit QL with Wilkinson shifts,
 * accumulating only the first row of the eigenvector matrix.
 * Throws NumericalError if an eigenvalue fails to converge in 30 sweeps.
 */
GaussRule tridiag_eigen(const JacobiMatrix& j);

/**
 * Incremental Lanczos tridiagonalization with full reorthogonalization.
 *
 * The process can be extended step by step. The basis may be released to
 * save memory; a later extension then replays the recurrence from the start
 * vector, which reproduces the same coefficients bit for bit.
 */
class LanczosProcess {
public:
    /// start need not be normalized but must be nonzero. breakdown_tol is an
    /// absolute threshold on the next off-diagonal coefficient.
    LanczosProcess(const SymmetricOperator& op, std::vector<double> start, double breakdown_tol);
    LanczosProcess(const SymmetricOperator& op, std::size_t start_index, double breakdown_tol);

    /// Runs until `steps() == p` or breakdown; returns steps().
    std::size_t extend_to(std::size_t p);

    std::size_t steps() const noexcept { return alpha_.size(); }
    bool breakdown() const noexcept { return breakdown_; }

    /// J_p for p = steps().
    JacobiMatrix jacobi() const;
    /// Coefficient coupling step p to step p + 1; zero after breakdown.
    double next_beta() const noexcept { return breakdown_ ? 0.0 : next_beta_; }

    /// Norm of the start vector before normalization.
    double start_norm() const noexcept { return start_norm_; }

    void release_basis();
    bool has_basis() const noexcept { return !basis_.empty() || steps() == 0; }
    std::size_t basis_size_doubles() const noexcept { return basis_.size() * op_->dim(); }

    /// Orthonormal Lanczos vectors q_1..q_p (and q_{p+1} when available).
    const std::vector<std::vector<double>>& basis() const noexcept { return basis_; }

private:
    void step();
    void replay(std::size_t p);

    const SymmetricOperator* op_;
    std::vector<double> start_;
    double start_norm_ = 0.0;
    double tol_;
    std::vector<std::vector<double>> basis_;
    std::vector<double> alpha_;
    std::vector<double> beta_;  // beta_[k] couples q_{k+1} and q_{k+2} (0-based k)
    double next_beta_ = 0.0;
    bool breakdown_ = false;
    std::vector<double> work_;
};

struct LanczosResult {
    JacobiMatrix jacobi;
    double next_beta = 0.0;
    bool breakdown = false;
};

/// p_max Lanczos steps on op from the unit vector e_{start_index}.
LanczosResult lanczos(const SymmetricOperator& op, std::size_t start_index, std::size_t p_max,
                      double breakdown_tol);

} // namespace hubrank
