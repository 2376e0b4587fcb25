#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hubrank/analysis.hpp"
#include "hubrank/error.hpp"
#include "hubrank/expm.hpp"
#include "hubrank/rankers.hpp"
#include "oracles.hpp"

using namespace hubrank;
namespace ht = hubrank::testing;

namespace {

RankTable table(std::vector<double> s)
{
    return RankTable::from_scores(s);
}

// Textbook tau-b straight from the scores.
double tau_b_reference(const std::vector<double>& a, const std::vector<double>& b)
{
    double nc = 0, nd = 0, ta = 0, tb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0 && db == 0) {
                continue;
            }
            if (da == 0) {
                ++ta;
            } else if (db == 0) {
                ++tb;
            } else if ((da > 0) == (db > 0)) {
                ++nc;
            } else {
                ++nd;
            }
        }
    }
    return (nc - nd) / std::sqrt((nc + nd + ta) * (nc + nd + tb));
}

} // namespace

TEST_CASE("tau-b on identical, reversed and tied rankings")
{
    const auto a = table({4, 3, 2, 1});
    CHECK(kendall_tau_b(a, a) == doctest::Approx(1.0));
    CHECK(kendall_tau_b(a, table({1, 2, 3, 4})) == doctest::Approx(-1.0));
    CHECK(kendall_tau_b(table({1, 1, 1}), table({2, 2, 2})) == 1.0);
    CHECK(kendall_tau_b(table({1, 1, 1}), table({1, 2, 3})) == 0.0);
    CHECK_THROWS_AS(kendall_tau_b(a, table({1, 2})), ParameterError);
}

TEST_CASE("tau-b matches the textbook formula on integer-valued scores")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(0, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> a(15), b(15);
        for (std::size_t i = 0; i < 15; ++i) {
            a[i] = d(rng);
            b[i] = d(rng);
        }
        const double got = kendall_tau_b(table(a), table(b));
        CHECK(got == doctest::Approx(tau_b_reference(a, b)).epsilon(1e-12));
        CHECK(got == doctest::Approx(kendall_tau_b(table(b), table(a))));
        // strictly monotone transform of one side
        std::vector<double> ea(a.size());
        std::transform(a.begin(), a.end(), ea.begin(), [](double x) { return std::exp(x) * 3 + 1; });
        CHECK(kendall_tau_b(table(ea), table(b)) == doctest::Approx(got));
    }
}

TEST_CASE("overlap at k with a straddling tie group")
{
    const auto a = table({5, 4, 3, 2, 1});
    CHECK(overlap_at_k(a, a, 3) == 1.0);
    // b: node 0 first, nodes 1,2,3 tied, node 4 last
    const auto b = table({5, 2, 2, 2, 1});
    // top-2 of b: node 0 (1), nodes 1..3 (1/3 each); a: nodes 0, 1
    CHECK(overlap_at_k(a, b, 2) == doctest::Approx((1.0 + 1.0 / 3.0) / 2.0));
    CHECK(overlap_at_k(b, b, 2) == doctest::Approx(1.0));
    CHECK(overlap_at_k(a, table({1, 2, 3, 4, 5}), 2) == 0.0);
    CHECK_THROWS_AS(overlap_at_k(a, a, 0), ParameterError);
    CHECK_THROWS_AS(overlap_at_k(a, a, 6), ParameterError);
}

TEST_CASE("compare exp-exact with HITS on example 1 authorities")
{
    const auto g = ht::example1();
    const RankTable e(exp_centrality_exact(g).authority);
    const RankTable h(hits(g).authority);
    const std::vector<std::size_t> ks{1, 2, 4};
    const ComparisonReport r = compare(e, h, ks);
    CHECK(r.method_a == "exp-exact");
    CHECK(r.method_b == "hits");
    CHECK(r.kendall_tau_b == doctest::Approx(1.0));
    CHECK(r.overlap == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(r.top_a[1] == std::vector<NodeId>{1, 2});
    CHECK(r.top_b[2] == std::vector<NodeId>{1, 2, 3, 0});
}

TEST_CASE("spectral gap annotations")
{
    const GapReport deg = spectral_gap(ht::example2());
    CHECK(deg.degenerate);
    CHECK(deg.relative_gap < kDegenerateGap);
    CHECK(deg.sigma1 == doctest::Approx(std::sqrt(2.0)));

    const GapReport ex1 = spectral_gap(ht::example1());
    const auto sv = ht::singular_values(ht::example1());
    CHECK(ex1.sigma1 == doctest::Approx(sv[0]));
    CHECK(ex1.sigma2 == doctest::Approx(sv[1]));
    CHECK_FALSE(ex1.degenerate);
    CHECK(ex1.relative_gap >= 0.0);
    CHECK(ex1.relative_gap <= 1.0);

    const GapReport none = spectral_gap(DirectedGraph::from_edges(2, {}));
    CHECK(none.sigma1 == 0.0);
    CHECK_FALSE(none.annotation.empty());
}

TEST_CASE("symmetry fraction")
{
    CHECK(symmetry_fraction(ht::two_cycle()) == 1.0);
    CHECK(symmetry_fraction(ht::directed_path(5)) == 0.0);
    CHECK(symmetry_fraction(DirectedGraph::from_edges(3, {})) == 0.0);
    // example 1: (1,2)/(2,1) and (2,3)/(3,2) are mutual
    CHECK(symmetry_fraction(ht::example1()) == doctest::Approx(4.0 / 7.0));
}

TEST_CASE("Estrada index")
{
    CHECK(estrada_index(DirectedGraph::from_edges(3, {})) == doctest::Approx(6.0));
    CHECK(estrada_index(ht::two_cycle()) == doctest::Approx(4.0 * std::cosh(1.0)));
    for (const auto& g : {ht::example1(), ht::example2(), ht::random_digraph(6, 30, 0.2)}) {
        const Eigen::MatrixXd e = dense_expm(BipartiteOperator(g).to_dense());
        CHECK(estrada_index(g) == doctest::Approx(e.trace()).epsilon(1e-10));
        const auto scores = exp_centrality_exact(g);
        const double sum = std::accumulate(scores.hub.scores.begin(), scores.hub.scores.end(), 0.0) +
                           std::accumulate(scores.authority.scores.begin(), scores.authority.scores.end(), 0.0);
        CHECK(estrada_index(g) == doctest::Approx(sum).epsilon(1e-10));
    }
}

TEST_CASE("Ritz values lie in the spectrum and find the extremes")
{
    const auto g = ht::random_digraph(14, 40, 0.15);
    const auto sv = ht::singular_values(g);
    const auto ritz = ritz_values(g, 30);
    CHECK(!ritz.empty());
    for (double t : ritz) {
        CHECK(std::abs(t) <= sv[0] * (1 + 1e-10));
    }
    CHECK(ritz.back() == doctest::Approx(sv[0]).epsilon(1e-8));
    CHECK(ritz.front() == doctest::Approx(-sv[0]).epsilon(1e-8));
    CHECK_THROWS_AS(ritz_values(g, 0), ParameterError);
}
