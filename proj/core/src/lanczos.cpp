#include "hubrank/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hubrank/error.hpp"

namespace hubrank {
namespace {

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

} // namespace

Eigen::MatrixXd JacobiMatrix::to_dense() const
{
    const auto p = static_cast<Eigen::Index>(order());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        m(i, i) = alpha[i];
        if (i + 1 < p) {
            m(i, i + 1) = m(i + 1, i) = beta[i];
        }
    }
    return m;
}

GaussRule tridiag_eigen(const JacobiMatrix& jac)
{
    const std::size_t n = jac.order();
    if (n == 0) {
        return {};
    }
    if (jac.beta.size() + 1 != n) {
        throw ParameterError("Jacobi matrix: off-diagonal length must be order - 1");
    }

    std::vector<double> d = jac.alpha;
    std::vector<double> e(n, 0.0);
    std::copy(jac.beta.begin(), jac.beta.end(), e.begin());
    std::vector<double> z(n, 0.0);  // first row of the eigenvector matrix
    z[0] = 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 30;

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++sweeps > max_sweeps) {
                throw NumericalError("tridiagonal eigensolver did not converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                const double f = s * e[ii];
                const double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                const double zf = z[ii + 1];
                z[ii + 1] = s * z[ii] + c * zf;
                z[ii] = c * z[ii] - s * zf;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    GaussRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (std::size_t k : order) {
        rule.nodes.push_back(d[k]);
        rule.weights.push_back(z[k] * z[k]);
    }
    return rule;
}

LanczosProcess::LanczosProcess(const SymmetricOperator& op, std::vector<double> start, double breakdown_tol)
    : op_(&op), start_(std::move(start)), tol_(breakdown_tol)
{
    if (start_.size() != op.dim()) {
        throw ParameterError("Lanczos start vector length does not match operator dimension");
    }
    start_norm_ = std::sqrt(dot(start_, start_));
    if (!(start_norm_ > 0.0) || !std::isfinite(start_norm_)) {
        throw ParameterError("Lanczos start vector must be finite and nonzero");
    }
    replay(0);
}

LanczosProcess::LanczosProcess(const SymmetricOperator& op, std::size_t start_index, double breakdown_tol)
    : LanczosProcess(op,
                     [&] {
                         if (start_index >= op.dim()) {
                             throw ParameterError("Lanczos start index out of range");
                         }
                         std::vector<double> v(op.dim(), 0.0);
                         v[start_index] = 1.0;
                         return v;
                     }(),
                     breakdown_tol)
{
}

void LanczosProcess::replay(std::size_t p)
{
    basis_.clear();
    alpha_.clear();
    beta_.clear();
    next_beta_ = 0.0;
    breakdown_ = false;

    std::vector<double> q(start_);
    for (double& x : q) {
        x /= start_norm_;
    }
    basis_.push_back(std::move(q));
    while (steps() < p && !breakdown_) {
        step();
    }
}

std::size_t LanczosProcess::extend_to(std::size_t p)
{
    if (p <= steps() || breakdown_) {
        return steps();
    }
    if (basis_.empty()) {
        replay(p);
        return steps();
    }
    while (steps() < p && !breakdown_) {
        step();
    }
    return steps();
}

void LanczosProcess::step()
{
    const std::size_t dim = op_->dim();
    const std::size_t j = steps();
    if (j > 0) {
        beta_.push_back(next_beta_);
    }

    work_.assign(dim, 0.0);
    op_->apply(basis_[j], work_);
    const double a = dot(basis_[j], work_);
    axpy(-a, basis_[j], work_);
    if (j > 0) {
        axpy(-next_beta_, basis_[j - 1], work_);
    }
    // full reorthogonalization, two passes of modified Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k <= j; ++k) {
            axpy(-dot(basis_[k], work_), basis_[k], work_);
        }
    }
    alpha_.push_back(a);

    const double b = std::sqrt(dot(work_, work_));
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw NumericalError("Lanczos produced non-finite coefficients");
    }
    next_beta_ = b;
    if (b <= tol_ || j + 1 >= dim) {
        breakdown_ = true;
        return;
    }
    std::vector<double> q(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        q[i] = work_[i] / b;
    }
    basis_.push_back(std::move(q));
}

JacobiMatrix LanczosProcess::jacobi() const
{
    return JacobiMatrix{alpha_, beta_};
}

void LanczosProcess::release_basis()
{
    basis_.clear();
    basis_.shrink_to_fit();
    work_.clear();
    work_.shrink_to_fit();
}

LanczosResult lanczos(const SymmetricOperator& op, std::size_t start_index, std::size_t p_max, double breakdown_tol)
{
    if (p_max == 0) {
        throw ParameterError("Lanczos needs at least one step");
    }
    LanczosProcess proc(op, start_index, breakdown_tol);
    proc.extend_to(p_max);
    return {proc.jacobi(), proc.next_beta(), proc.breakdown()};
}

} // namespace hubrank
