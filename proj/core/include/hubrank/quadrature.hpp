#pragma once

#include <cstddef>

#include "hubrank/graph.hpp"
#include "hubrank/lanczos.hpp"

namespace hubrank {

/**
 * The functions for which Gauss-type rules give certified bounds: exp and
 * the resolvent t -> 1 / (1 - c t). Both have positive derivatives of every
 * order on the admissible range, which fixes the bound directions below.
 */
class MatrixFunction {
public:
    enum class Kind { exp, resolvent };

    static MatrixFunction exponential() noexcept { return MatrixFunction(Kind::exp, 0.0); }
    /// Throws ParameterError unless c > 0.
    static MatrixFunction resolvent(double c);

    Kind kind() const noexcept { return kind_; }
    double parameter() const noexcept { return c_; }

    /// True when t lies strictly left of the resolvent pole 1/c.
    bool admissible(double t) const noexcept { return kind_ == Kind::exp || c_ * t < 1.0; }
    double operator()(double t) const noexcept;

private:
    MatrixFunction(Kind kind, double c) noexcept : kind_(kind), c_(c) {}

    Kind kind_;
    double c_;
};

/// Interval [a, b] containing the spectrum of the bipartite operator.
struct SpectrumInterval {
    double a = 0.0;
    double b = 0.0;
};

/// Certified bracket for e_i^T f(M) e_i.
struct NodeBounds {
    std::size_t node = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t p = 0;   // Lanczos steps used
    bool exact = false;  // Lanczos broke down, lower == upper

    double midpoint() const noexcept { return 0.5 * (lower + upper); }
    double width() const noexcept { return upper - lower; }
};

/// b = min(1.01 sigma1, largest weighted degree of the bipartite graph),
/// a = -b. The padded sigma1 is only used when power iteration converged.
SpectrumInterval spectrum_interval(const DirectedGraph& g);

/// Absolute Lanczos breakdown threshold 1e-12 * b.
double breakdown_tolerance(const SpectrumInterval& iv) noexcept;

/// sum_j w_j f(t_j) = e_1^T f(J) e_1. For f = exp this is a lower bound on
/// the diagonal entry. Throws ParameterError if a node hits the resolvent pole.
double gauss_estimate(const JacobiMatrix& j, const MatrixFunction& f);

/**
 * Gauss-Radau bracket after p Lanczos steps from e_node. The Jacobi matrix
 * is extended by one row so that tau is an eigenvalue: with d the last
 * pivot of J_p - tau I, the appended diagonal is tau + beta_p^2 / d.
 * tau = a gives the lower bound and tau = b the upper bound.
 */
NodeBounds radau_bounds(const SymmetricOperator& op, std::size_t node, std::size_t p, const SpectrumInterval& iv,
                        const MatrixFunction& f);

/// Same bracket from an existing Lanczos state (any number of steps).
NodeBounds radau_bounds(const LanczosProcess& proc, std::size_t node, const SpectrumInterval& iv,
                        const MatrixFunction& f);

/// Gauss-Lobatto upper bound with both a and b prescribed.
double lobatto_bound(const SymmetricOperator& op, std::size_t node, std::size_t p, const SpectrumInterval& iv,
                     const MatrixFunction& f);

/**
 * Gauss estimate of e_u^T f(M) e_v (u != v) by polarization:
 * (q(e_u + e_v) - q(e_u - e_v)) / 4 with q(w) = w^T f(M) w, each obtained
 * from p Lanczos steps started at w / ||w||.
 */
double bilinear_estimate(const SymmetricOperator& op, std::size_t u, std::size_t v, std::size_t p,
                         const MatrixFunction& f, double breakdown_tol = 0.0);

} // namespace hubrank
