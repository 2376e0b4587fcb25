#include "hubrank/power.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hubrank/error.hpp"

namespace hubrank {
namespace {

double norm2(const std::vector<double>& x)
{
    double s = 0.0;
    for (double t : x) {
        s += t * t;
    }
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void project_out(std::vector<double>& x, const std::vector<double>& unit)
{
    const double c = dot(x, unit);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] -= c * unit[i];
    }
}

struct PowerRun {
    std::vector<double> v;
    double sigma = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

// Power iteration on A^T A, optionally kept orthogonal to `deflate`.
PowerRun run_power(const DirectedGraph& g, std::vector<double> v, const std::vector<double>* deflate, double tol,
                   std::size_t max_iter)
{
    const std::size_t n = g.node_count();
    std::vector<double> u(n);
    std::vector<double> w(n);
    PowerRun run;

    if (deflate != nullptr) {
        project_out(v, *deflate);
    }
    double nv = norm2(v);
    if (nv == 0.0) {
        run.v = std::move(v);
        run.converged = true;
        return run;
    }
    for (double& t : v) {
        t /= nv;
    }

    for (std::size_t it = 1; it <= max_iter; ++it) {
        spmv(g, v, u, Transpose::no);
        spmv(g, u, w, Transpose::yes);
        if (deflate != nullptr) {
            project_out(w, *deflate);
        }
        const double nw = norm2(w);
        run.iterations = it;
        if (nw == 0.0) {
            // v lies in the null space of A^T A (after deflation)
            run.converged = true;
            break;
        }
        // the sign of a singular vector is arbitrary; compare up to sign
        double diff_plus = 0.0;
        double diff_minus = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = w[i] / nw;
            diff_plus += (t - v[i]) * (t - v[i]);
            diff_minus += (t + v[i]) * (t + v[i]);
            w[i] = t;
        }
        v.swap(w);
        if (std::sqrt(std::min(diff_plus, diff_minus)) < tol) {
            run.converged = true;
            break;
        }
    }
    spmv(g, v, u, Transpose::no);
    run.sigma = norm2(u);
    run.v = std::move(v);
    return run;
}

} // namespace

SpectralEstimate power_singular_pair(const DirectedGraph& g, double tol, std::size_t max_iter)
{
    if (!(tol > 0.0)) {
        throw ParameterError("power iteration tolerance must be positive");
    }
    const std::size_t n = g.node_count();
    SpectralEstimate est;
    if (g.edge_count() == 0) {
        est.converged = true;
        est.right.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        est.left = est.right;
        return est;
    }

    PowerRun first = run_power(g, std::vector<double>(n, 1.0), nullptr, tol, max_iter);

    // deterministic non-constant start: the constant vector can lie entirely
    // in span{v1} plus lower eigenspaces when sigma1 is repeated
    std::vector<double> z(n);
    constexpr double golden = 0.6180339887498949;
    for (std::size_t i = 0; i < n; ++i) {
        const double frac = std::fmod(static_cast<double>(i + 1) * golden, 1.0);
        z[i] = 1.0 + frac;
    }
    PowerRun second = run_power(g, std::move(z), &first.v, tol, max_iter);

    est.sigma1 = first.sigma;
    est.sigma2 = std::min(second.sigma, first.sigma);
    est.iterations = first.iterations + second.iterations;
    est.converged = first.converged && second.converged;
    est.right = first.v;

    std::vector<double> u = spmv(g, est.right, Transpose::no);
    std::vector<double> w = spmv(g, u, Transpose::yes);
    const double s2 = est.sigma1 * est.sigma1;
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        r += (w[i] - s2 * est.right[i]) * (w[i] - s2 * est.right[i]);
    }
    est.residual = std::sqrt(r);
    if (est.sigma1 > 0.0) {
        for (double& t : u) {
            t /= est.sigma1;
        }
    }
    est.left = std::move(u);
    return est;
}

namespace {

bool acyclic(const DirectedGraph& g)
{
    const std::size_t n = g.node_count();
    std::vector<std::size_t> indeg(n);
    std::vector<NodeId> ready;
    for (NodeId j = 0; j < n; ++j) {
        indeg[j] = g.in_degree(j);
        if (indeg[j] == 0) {
            ready.push_back(j);
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const NodeId i = ready.back();
        ready.pop_back();
        ++removed;
        for (NodeId j : g.successors(i)) {
            if (--indeg[j] == 0) {
                ready.push_back(j);
            }
        }
    }
    return removed == n;
}

} // namespace

SpectralRadius spectral_radius(const DirectedGraph& g, double tol, std::size_t max_iter)
{
    const std::size_t n = g.node_count();
    SpectralRadius result;
    auto fallback = [&] {
        double max_out = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            max_out = std::max(max_out, static_cast<double>(g.out_degree(i)));
        }
        const double bound = max_out * g.max_weight();
        const double sigma1 = power_singular_pair(g).sigma1;
        result.value = std::min(bound, sigma1);
        result.is_bound = true;
        result.converged = false;
        return result;
    };
    if (g.edge_count() == 0) {
        result.value = 0.0;
        result.converged = true;
        return result;
    }
    if (acyclic(g)) {
        // nilpotent adjacency
        result.value = 0.0;
        result.converged = true;
        return result;
    }

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> ax(n);
    double lambda_prev = -1.0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        spmv(g, x, ax, Transpose::no);
        double lambda = 0.0;
        for (double t : ax) {
            lambda += t;  // ||A x||_1 with x >= 0, ||x||_1 = 1
        }
        result.iterations = it;
        if (lambda > 0.0 && std::abs(lambda - lambda_prev) <= tol * lambda) {
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                res += std::abs(ax[i] - lambda * x[i]);
            }
            if (res <= std::sqrt(tol) * lambda) {
                result.value = lambda;
                result.converged = true;
                return result;
            }
        }
        lambda_prev = lambda;
        // x <- (A + I) x / ||(A + I) x||_1
        const double norm = lambda + 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = (ax[i] + x[i]) / norm;
        }
    }
    return fallback();
}

} // namespace hubrank
