#include "hubrank/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "hubrank/error.hpp"
#include "hubrank/power.hpp"

namespace hubrank {
namespace {

// Last pivot of the LU factorization of J - tau I, or nullopt when a pivot
// vanishes (tau coincides with an eigenvalue of a leading submatrix).
std::optional<double> last_pivot(const JacobiMatrix& j, double tau)
{
    const std::size_t p = j.order();
    double scale = std::abs(tau);
    for (std::size_t k = 0; k < p; ++k) {
        scale = std::max(scale, std::abs(j.alpha[k]));
        if (k + 1 < p) {
            scale = std::max(scale, j.beta[k]);
        }
    }
    const double tiny = 1e-14 * std::max(scale, 1e-300);
    double d = j.alpha[0] - tau;
    if (std::abs(d) <= tiny) {
        return std::nullopt;
    }
    for (std::size_t k = 1; k < p; ++k) {
        d = j.alpha[k] - tau - j.beta[k - 1] * j.beta[k - 1] / d;
        if (std::abs(d) <= tiny) {
            return std::nullopt;
        }
    }
    return d;
}

JacobiMatrix append(const JacobiMatrix& j, double off, double diag)
{
    JacobiMatrix ext = j;
    ext.beta.push_back(off);
    ext.alpha.push_back(diag);
    return ext;
}

double radau_value(const JacobiMatrix& j, double next_beta, double tau, double outward, const MatrixFunction& f)
{
    for (int attempt = 0; attempt < 2; ++attempt) {
        const double t = attempt == 0 ? tau : tau + outward;
        if (const auto d = last_pivot(j, t)) {
            return gauss_estimate(append(j, next_beta, t + next_beta * next_beta / *d), f);
        }
    }
    throw NumericalError("Gauss-Radau prescribed node coincides with a Ritz value");
}

} // namespace

MatrixFunction MatrixFunction::resolvent(double c)
{
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ParameterError("resolvent parameter c must be positive");
    }
    return MatrixFunction(Kind::resolvent, c);
}

double MatrixFunction::operator()(double t) const noexcept
{
    return kind_ == Kind::exp ? std::exp(t) : 1.0 / (1.0 - c_ * t);
}

SpectrumInterval spectrum_interval(const DirectedGraph& g)
{
    double gershgorin = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        gershgorin = std::max({gershgorin, g.weighted_out_degree(i), g.weighted_in_degree(i)});
    }
    double b = gershgorin;
    if (g.edge_count() > 0) {
        const SpectralEstimate est = power_singular_pair(g);
        if (est.converged) {
            b = std::min(1.01 * est.sigma1, gershgorin);
        }
    }
    return {-b, b};
}

double breakdown_tolerance(const SpectrumInterval& iv) noexcept
{
    return 1e-12 * std::max(std::abs(iv.a), std::abs(iv.b));
}

double gauss_estimate(const JacobiMatrix& j, const MatrixFunction& f)
{
    const GaussRule rule = tridiag_eigen(j);
    double s = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        if (!f.admissible(rule.nodes[k])) {
            throw ParameterError("resolvent pole lies inside the quadrature nodes; c is too large");
        }
        s += rule.weights[k] * f(rule.nodes[k]);
    }
    return s;
}

NodeBounds radau_bounds(const LanczosProcess& proc, std::size_t node, const SpectrumInterval& iv,
                        const MatrixFunction& f)
{
    if (proc.steps() == 0) {
        throw ParameterError("Gauss-Radau bounds need at least one Lanczos step");
    }
    if (!(iv.a <= iv.b)) {
        throw ParameterError("invalid spectrum interval");
    }
    NodeBounds nb;
    nb.node = node;
    nb.p = proc.steps();
    const JacobiMatrix j = proc.jacobi();
    const double scale = proc.start_norm() * proc.start_norm();

    if (proc.breakdown()) {
        const double value = scale * gauss_estimate(j, f);
        nb.lower = nb.upper = value;
        nb.exact = true;
        return nb;
    }
    const double beta = proc.next_beta();
    const double shift = 1e-8 * std::max(iv.b - iv.a, 1e-300);
    nb.lower = scale * radau_value(j, beta, iv.a, -shift, f);
    nb.upper = scale * radau_value(j, beta, iv.b, shift, f);
    if (nb.lower > nb.upper) {
        // only reachable through rounding once the bracket has collapsed
        nb.lower = nb.upper = 0.5 * (nb.lower + nb.upper);
    }
    return nb;
}

NodeBounds radau_bounds(const SymmetricOperator& op, std::size_t node, std::size_t p, const SpectrumInterval& iv,
                        const MatrixFunction& f)
{
    if (p == 0) {
        throw ParameterError("Gauss-Radau bounds need p >= 1");
    }
    LanczosProcess proc(op, node, breakdown_tolerance(iv));
    proc.extend_to(p);
    return radau_bounds(proc, node, iv, f);
}

double lobatto_bound(const SymmetricOperator& op, std::size_t node, std::size_t p, const SpectrumInterval& iv,
                     const MatrixFunction& f)
{
    if (p == 0) {
        throw ParameterError("Gauss-Lobatto bound needs p >= 1");
    }
    LanczosProcess proc(op, node, breakdown_tolerance(iv));
    proc.extend_to(p);
    const JacobiMatrix j = proc.jacobi();
    if (proc.breakdown()) {
        return gauss_estimate(j, f);
    }
    const double shift = 1e-8 * std::max(iv.b - iv.a, 1e-300);
    for (int attempt = 0; attempt < 2; ++attempt) {
        const double a = attempt == 0 ? iv.a : iv.a - shift;
        const double b = attempt == 0 ? iv.b : iv.b + shift;
        if (!(b > a)) {
            break;
        }
        const auto da = last_pivot(j, a);
        const auto db = last_pivot(j, b);
        if (!da || !db) {
            continue;
        }
        // (J - aI) delta = e_p and (J - bI) mu = e_p, last components 1/d
        const double delta = 1.0 / *da;
        const double mu = 1.0 / *db;
        if (!(delta - mu > 0.0)) {
            continue;
        }
        const double gamma2 = (b - a) / (delta - mu);
        return gauss_estimate(append(j, std::sqrt(gamma2), a + gamma2 * delta), f);
    }
    throw NumericalError("Gauss-Lobatto prescribed nodes coincide with Ritz values");
}

double bilinear_estimate(const SymmetricOperator& op, std::size_t u, std::size_t v, std::size_t p,
                         const MatrixFunction& f, double breakdown_tol)
{
    const std::size_t dim = op.dim();
    if (u >= dim || v >= dim) {
        throw ParameterError("bilinear_estimate: index out of range");
    }
    if (u == v) {
        throw ParameterError("bilinear_estimate: u and v must differ");
    }
    if (p == 0) {
        throw ParameterError("bilinear_estimate: p must be positive");
    }
    auto quadratic = [&](double sign) {
        std::vector<double> w(dim, 0.0);
        w[u] = 1.0;
        w[v] = sign;
        LanczosProcess proc(op, std::move(w), breakdown_tol);
        proc.extend_to(p);
        return proc.start_norm() * proc.start_norm() * gauss_estimate(proc.jacobi(), f);
    };
    return 0.25 * (quadratic(1.0) - quadratic(-1.0));
}

} // namespace hubrank
