#include "hubrank/expm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "hubrank/error.hpp"

namespace hubrank {
namespace {

using Eigen::MatrixXd;

void check_square(const MatrixXd& m)
{
    if (m.rows() != m.cols()) {
        throw ParameterError("matrix exponential needs a square matrix");
    }
    if (static_cast<std::size_t>(m.rows()) > kDenseThreshold) {
        throw ParameterError("dimension " + std::to_string(m.rows()) + " exceeds dense threshold " +
                             std::to_string(kDenseThreshold));
    }
    if (!m.allFinite()) {
        throw NumericalError("matrix exponential input has non-finite entries");
    }
}

double norm1(const MatrixXd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
}

// Padé coefficients b_0..b_m of the [m/m] approximant to exp
constexpr std::array<double, 4> kPade3 = {120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kPade5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kPade7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                          25200.0,    1512.0,    56.0,      1.0};
constexpr std::array<double, 10> kPade9 = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                                           2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kPade13 = {64764752532480000.0,
                                            32382376266240000.0,
                                            7771770303897600.0,
                                            1187353796428800.0,
                                            129060195264000.0,
                                            10559470521600.0,
                                            670442572800.0,
                                            33522128640.0,
                                            1323241920.0,
                                            40840800.0,
                                            960960.0,
                                            16380.0,
                                            182.0,
                                            1.0};

// 1-norm limits below which the degree-m approximant is accurate to unit roundoff
constexpr std::array<double, 5> kTheta = {1.495585217958292e-2, 2.539398330063230e-1, 9.504178996162932e-1,
                                          2.097847961257068e0, 5.371920351148152e0};

template <std::size_t N>
MatrixXd pade_low(const MatrixXd& a, const std::array<double, N>& b)
{
    // degree m = N - 1 is odd: U = A * sum b_{2k+1} A^{2k}, V = sum b_{2k} A^{2k}
    const auto n = a.rows();
    const MatrixXd ident = MatrixXd::Identity(n, n);
    const MatrixXd a2 = a * a;
    MatrixXd power = ident;
    MatrixXd u_inner = MatrixXd::Zero(n, n);
    MatrixXd v = MatrixXd::Zero(n, n);
    for (std::size_t k = 0; k < N; k += 2) {
        v += b[k] * power;
        u_inner += b[k + 1] * power;
        if (k + 2 < N) {
            power = power * a2;
        }
    }
    const MatrixXd u = a * u_inner;
    return (v - u).partialPivLu().solve(v + u);
}

MatrixXd pade13(const MatrixXd& a)
{
    const auto& b = kPade13;
    const auto n = a.rows();
    const MatrixXd ident = MatrixXd::Identity(n, n);
    const MatrixXd a2 = a * a;
    const MatrixXd a4 = a2 * a2;
    const MatrixXd a6 = a4 * a2;
    const MatrixXd u_hi = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    const MatrixXd u = a * (u_hi + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
    const MatrixXd v_hi = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    const MatrixXd v = v_hi + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
    return (v - u).partialPivLu().solve(v + u);
}

} // namespace

Eigen::MatrixXd dense_expm(const Eigen::MatrixXd& m)
{
    check_square(m);
    if (m.size() == 0) {
        return m;
    }
    const double norm = norm1(m);
    if (norm <= kTheta[0]) {
        return pade_low(m, kPade3);
    }
    if (norm <= kTheta[1]) {
        return pade_low(m, kPade5);
    }
    if (norm <= kTheta[2]) {
        return pade_low(m, kPade7);
    }
    if (norm <= kTheta[3]) {
        return pade_low(m, kPade9);
    }
    int s = 0;
    if (norm > kTheta[4]) {
        s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta[4]))));
    }
    MatrixXd x = pade13(m / std::ldexp(1.0, s));
    for (int k = 0; k < s; ++k) {
        x = x * x;
    }
    if (!x.allFinite()) {
        throw NumericalError("matrix exponential overflowed");
    }
    return x;
}

Eigen::MatrixXd dense_expm_symmetric(const Eigen::MatrixXd& m)
{
    check_square(m);
    if (m.size() == 0) {
        return m;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
    if (es.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver failed");
    }
    const MatrixXd& q = es.eigenvectors();
    return q * es.eigenvalues().array().exp().matrix().asDiagonal() * q.transpose();
}

std::vector<double> expm_action(const DirectedGraph& g, std::span<const double> v, Transpose transpose,
                                ExpmActionMethod method)
{
    const std::size_t n = g.node_count();
    if (v.size() != n) {
        throw ParameterError("expm_action: vector length does not match node count");
    }
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw NumericalError("expm_action: non-finite input vector");
        }
    }

    if (method == ExpmActionMethod::dense) {
        MatrixXd a = dense_adjacency(g);
        if (transpose == Transpose::yes) {
            a.transposeInPlace();
        }
        const Eigen::VectorXd x =
            dense_expm(a) * Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(n));
        return {x.data(), x.data() + x.size()};
    }

    double norm = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        norm = std::max({norm, g.weighted_out_degree(i), g.weighted_in_degree(i)});
    }
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(norm)));
    const double scale = 1.0 / static_cast<double>(steps);
    constexpr double unit = 0x1p-53;
    constexpr int max_terms = 100;

    std::vector<double> x(v.begin(), v.end());
    std::vector<double> term(n);
    std::vector<double> next(n);
    auto inf_norm = [](const std::vector<double>& y) {
        double r = 0.0;
        for (double t : y) {
            r = std::max(r, std::abs(t));
        }
        return r;
    };

    for (std::size_t s = 0; s < steps; ++s) {
        term = x;
        int small_terms = 0;
        int k = 1;
        for (; k <= max_terms; ++k) {
            spmv(g, term, next, transpose);
            const double factor = scale / static_cast<double>(k);
            for (std::size_t i = 0; i < n; ++i) {
                term[i] = factor * next[i];
                x[i] += term[i];
            }
            if (inf_norm(term) <= unit * inf_norm(x)) {
                if (++small_terms == 2) {
                    break;
                }
            } else {
                small_terms = 0;
            }
        }
        if (k > max_terms) {
            throw NumericalError("expm_action: Taylor series did not converge");
        }
    }
    for (double t : x) {
        if (!std::isfinite(t)) {
            throw NumericalError("expm_action overflowed");
        }
    }
    return x;
}

} // namespace hubrank
