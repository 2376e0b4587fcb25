#include "oracles.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace hubrank::testing {

Eigen::MatrixXd adjacency(const DirectedGraph& g)
{
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        a(e.source, e.target) += e.weight;
    }
    return a;
}

Eigen::MatrixXd bipartite(const Eigen::MatrixXd& a)
{
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    m.topRightCorner(n, n) = a;
    m.bottomLeftCorner(n, n) = a.transpose();
    return m;
}

Eigen::MatrixXd expm_symmetric(const Eigen::MatrixXd& m)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    const Eigen::VectorXd ex = eig.eigenvalues().array().exp();
    return eig.eigenvectors() * ex.asDiagonal() * eig.eigenvectors().transpose();
}

Eigen::MatrixXd expm_general(const Eigen::MatrixXd& m)
{
    return m.exp();
}

DiagonalPair exp_diagonals(const DirectedGraph& g)
{
    const Eigen::MatrixXd e = expm_symmetric(bipartite(adjacency(g)));
    const auto n = static_cast<Eigen::Index>(g.node_count());
    DiagonalPair d;
    for (Eigen::Index i = 0; i < n; ++i) {
        d.hub.push_back(e(i, i));
        d.authority.push_back(e(n + i, n + i));
    }
    return d;
}

namespace {

std::vector<double> resolvent_diag(const Eigen::MatrixXd& gram, double c)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    const Eigen::VectorXd f = (1.0 - c * c * eig.eigenvalues().array()).inverse();
    const Eigen::MatrixXd r = eig.eigenvectors() * f.asDiagonal() * eig.eigenvectors().transpose();
    return to_std(r.diagonal());
}

std::vector<double> dominant_unit_sum(const Eigen::MatrixXd& gram)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    Eigen::VectorXd v = eig.eigenvectors().col(gram.rows() - 1).cwiseAbs();
    return to_std(v / v.sum());
}

} // namespace

DiagonalPair resolvent_diagonals(const DirectedGraph& g, double c)
{
    const Eigen::MatrixXd a = adjacency(g);
    return {resolvent_diag(a * a.transpose(), c), resolvent_diag(a.transpose() * a, c)};
}

std::vector<double> singular_values(const DirectedGraph& g)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(adjacency(g));
    return to_std(svd.singularValues());
}

DiagonalPair hits_scores(const DirectedGraph& g)
{
    const Eigen::MatrixXd a = adjacency(g);
    return {dominant_unit_sum(a * a.transpose()), dominant_unit_sum(a.transpose() * a)};
}

DiagonalPair katz_scores(const DirectedGraph& g, double c)
{
    const Eigen::MatrixXd a = adjacency(g);
    const Eigen::Index n = a.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    return {to_std((id - c * a).fullPivLu().solve(ones)), to_std((id - c * a.transpose()).fullPivLu().solve(ones))};
}

std::vector<double> pagerank(const DirectedGraph& g, double alpha)
{
    const Eigen::MatrixXd a = adjacency(g);
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd p(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = a.row(i).sum();
        if (s > 0.0) {
            p.row(i) = a.row(i) / s;
        } else {
            p.row(i).setConstant(1.0 / static_cast<double>(n));
        }
    }
    const Eigen::MatrixXd google =
        alpha * p + (1.0 - alpha) / static_cast<double>(n) * Eigen::MatrixXd::Ones(n, n);
    // pi^T (G - I) = 0 with sum(pi) = 1: replace one equation by the normalization
    Eigen::MatrixXd sys = (google.transpose() - Eigen::MatrixXd::Identity(n, n));
    sys.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    return to_std(sys.fullPivLu().solve(rhs));
}

double spectral_radius(const DirectedGraph& g)
{
    Eigen::EigenSolver<Eigen::MatrixXd> eig(adjacency(g), false);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
}

std::vector<double> to_std(const Eigen::VectorXd& v)
{
    return {v.data(), v.data() + v.size()};
}

} // namespace hubrank::testing
