#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "fixtures.hpp"
#include "hubrank/error.hpp"
#include "hubrank/lanczos.hpp"
#include "hubrank/quadrature.hpp"
#include "oracles.hpp"

using namespace hubrank;

TEST_CASE("tridiag_eigen matches a dense symmetric eigensolver")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> diag(-3.0, 3.0);
    std::uniform_real_distribution<double> off(0.05, 2.0);
    for (std::size_t p : {1u, 2u, 3u, 7u, 20u, 45u}) {
        JacobiMatrix j;
        for (std::size_t k = 0; k < p; ++k) {
            j.alpha.push_back(diag(rng));
            if (k + 1 < p) {
                j.beta.push_back(off(rng));
            }
        }
        const GaussRule rule = tridiag_eigen(j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(j.to_dense());
        REQUIRE(rule.nodes.size() == p);
        double wsum = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            CHECK(rule.nodes[k] == doctest::Approx(ref.eigenvalues()(kk)).epsilon(1e-12));
            CHECK(rule.weights[k] == doctest::Approx(std::pow(ref.eigenvectors()(0, kk), 2)).epsilon(1e-9));
            wsum += rule.weights[k];
        }
        CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    }
}

TEST_CASE("Lanczos on the 2-cycle bipartite graph")
{
    const auto g = hubrank::testing::two_cycle();
    const BipartiteOperator op(g);
    LanczosProcess proc(op, 0, 1e-12);
    proc.extend_to(10);
    CHECK(proc.breakdown());
    CHECK(proc.steps() == 2);
    const JacobiMatrix j = proc.jacobi();
    CHECK(j.alpha == std::vector<double>{0.0, 0.0});
    REQUIRE(j.beta.size() == 1);
    CHECK(j.beta[0] == doctest::Approx(1.0));
    CHECK(proc.next_beta() == 0.0);
}

TEST_CASE("Lanczos basis stays orthonormal and reproduces the operator")
{
    const auto g = hubrank::testing::random_digraph(17, 30, 0.2);
    const BipartiteOperator op(g);
    LanczosProcess proc(op, 4, 1e-12);
    proc.extend_to(12);
    const auto& q = proc.basis();
    REQUIRE(q.size() >= 12);
    const std::size_t p = proc.steps();
    Eigen::MatrixXd qm(op.dim(), static_cast<Eigen::Index>(p));
    for (std::size_t k = 0; k < p; ++k) {
        qm.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(q[k].data(), op.dim());
    }
    const Eigen::MatrixXd gram = qm.transpose() * qm;
    CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).norm() < 1e-12);
    const Eigen::MatrixXd m = op.to_dense();
    const Eigen::MatrixXd t = qm.transpose() * m * qm;
    CHECK((t - proc.jacobi().to_dense()).norm() < 1e-10);
}

TEST_CASE("released bases replay bit for bit")
{
    const auto g = hubrank::testing::random_digraph(5, 35, 0.15);
    const BipartiteOperator op(g);
    LanczosProcess full(op, 2, 1e-12);
    full.extend_to(15);

    LanczosProcess partial(op, 2, 1e-12);
    partial.extend_to(7);
    partial.release_basis();
    CHECK_FALSE(partial.has_basis());
    CHECK(partial.basis_size_doubles() == 0);
    partial.extend_to(15);
    CHECK(partial.has_basis());

    const JacobiMatrix a = full.jacobi();
    const JacobiMatrix b = partial.jacobi();
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(full.next_beta() == partial.next_beta());
}

TEST_CASE("the lanczos() helper and start vector validation")
{
    const auto g = hubrank::testing::example1();
    const BipartiteOperator op(g);
    const LanczosResult r = lanczos(op, 1, 3, 1e-12);
    CHECK(r.jacobi.order() == 3);
    CHECK(r.next_beta > 0.0);
    CHECK_THROWS_AS(LanczosProcess(op, std::vector<double>(op.dim(), 0.0), 1e-12), ParameterError);
    CHECK_THROWS_AS(LanczosProcess(op, std::vector<double>(3, 1.0), 1e-12), ParameterError);
    CHECK_THROWS_AS(LanczosProcess(op, op.dim(), 1e-12), ParameterError);
}

TEST_CASE("Gauss rule from a breakdown reproduces the diagonal exactly")
{
    const auto g = hubrank::testing::example3();
    const BipartiteOperator op(g);
    const auto ref = hubrank::testing::exp_diagonals(g);
    for (std::size_t idx = 0; idx < op.dim(); ++idx) {
        LanczosProcess proc(op, idx, 1e-12);
        proc.extend_to(op.dim());
        REQUIRE(proc.breakdown());
        const double value = gauss_estimate(proc.jacobi(), MatrixFunction::exponential());
        const double expected = idx < 6 ? ref.hub[idx] : ref.authority[idx - 6];
        CHECK(value == doctest::Approx(expected).epsilon(1e-12));
    }
}
