#include "hubrank/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "hubrank/error.hpp"
#include "hubrank/expm.hpp"
#include "hubrank/lanczos.hpp"
#include "hubrank/power.hpp"
#include "hubrank/quadrature.hpp"

namespace hubrank {
namespace {

int sign(std::size_t x, std::size_t y)
{
    return x < y ? 1 : (x > y ? -1 : 0);
}

// Weight of each node in the first k positions, splitting a straddling tie
// group evenly among its members.
std::vector<double> top_weights(const RankTable& t, std::size_t k)
{
    std::vector<double> w(t.size(), 0.0);
    std::size_t filled = 0;
    for (const auto& group : t.groups()) {
        if (filled >= k) {
            break;
        }
        const std::size_t take = std::min(group.size(), k - filled);
        const double share = static_cast<double>(take) / static_cast<double>(group.size());
        for (NodeId v : group) {
            w[v] = share;
        }
        filled += take;
    }
    return w;
}

void require_same_nodes(const RankTable& a, const RankTable& b)
{
    if (a.size() != b.size()) {
        throw ParameterError("rankings cover different node sets (" + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + " nodes)");
    }
}

} // namespace

double kendall_tau_b(const RankTable& a, const RankTable& b)
{
    require_same_nodes(a, b);
    const std::vector<std::size_t> ra = a.ranks();
    const std::vector<std::size_t> rb = b.ranks();
    const std::size_t n = ra.size();
    long long concordant_minus_discordant = 0;
    long long untied_a = 0;
    long long untied_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int sa = sign(ra[i], ra[j]);
            const int sb = sign(rb[i], rb[j]);
            concordant_minus_discordant += sa * sb;
            untied_a += sa != 0;
            untied_b += sb != 0;
        }
    }
    if (untied_a == 0 || untied_b == 0) {
        return untied_a == untied_b ? 1.0 : 0.0;
    }
    return static_cast<double>(concordant_minus_discordant) /
           std::sqrt(static_cast<double>(untied_a) * static_cast<double>(untied_b));
}

double overlap_at_k(const RankTable& a, const RankTable& b, std::size_t k)
{
    require_same_nodes(a, b);
    if (k == 0 || k > a.size()) {
        throw ParameterError("overlap k = " + std::to_string(k) + " outside [1, " + std::to_string(a.size()) + "]");
    }
    const auto wa = top_weights(a, k);
    const auto wb = top_weights(b, k);
    double common = 0.0;
    for (std::size_t v = 0; v < wa.size(); ++v) {
        common += std::min(wa[v], wb[v]);
    }
    return std::clamp(common / static_cast<double>(k), 0.0, 1.0);
}

ComparisonReport compare(const RankTable& a, const RankTable& b, std::span<const std::size_t> ks)
{
    ComparisonReport r;
    r.method_a = a.source().method;
    r.method_b = b.source().method;
    r.kendall_tau_b = kendall_tau_b(a, b);
    for (std::size_t k : ks) {
        r.ks.push_back(k);
        r.overlap.push_back(overlap_at_k(a, b, k));
        r.top_a.emplace_back(a.order().begin(), a.order().begin() + static_cast<std::ptrdiff_t>(k));
        r.top_b.emplace_back(b.order().begin(), b.order().begin() + static_cast<std::ptrdiff_t>(k));
    }
    return r;
}

GapReport spectral_gap(const DirectedGraph& g)
{
    GapReport r;
    if (g.edge_count() == 0) {
        r.annotation = "no edges: every score is trivial";
        return r;
    }
    const SpectralEstimate est = power_singular_pair(g);
    r.sigma1 = est.sigma1;
    r.sigma2 = est.sigma2;
    r.converged = est.converged;
    r.relative_gap = std::clamp((est.sigma1 - est.sigma2) / est.sigma1, 0.0, 1.0);
    if (r.relative_gap < kDegenerateGap) {
        r.degenerate = true;
        r.annotation = "degenerate: sigma1 is repeated, HITS depends on its starting vector";
    } else if (r.relative_gap < kWideGap) {
        r.annotation = "small gap: exponential and HITS rankings may diverge";
    } else {
        r.annotation = "wide gap: exponential ranking expected to track HITS";
    }
    return r;
}

double symmetry_fraction(const DirectedGraph& g)
{
    if (g.edge_count() == 0) {
        return 0.0;
    }
    std::size_t mutual = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        for (NodeId j : g.successors(i)) {
            mutual += g.has_edge(j, i);
        }
    }
    return static_cast<double>(mutual) / static_cast<double>(g.edge_count());
}

double estrada_index(const DirectedGraph& g)
{
    if (g.node_count() > kDenseThreshold) {
        throw ParameterError("estrada_index needs n <= " + std::to_string(kDenseThreshold));
    }
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(dense_adjacency(g));
    double s = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        s += std::cosh(svd.singularValues()(i));
    }
    return 2.0 * s;
}

std::vector<double> ritz_values(const DirectedGraph& g, std::size_t p)
{
    if (p == 0) {
        throw ParameterError("ritz_values needs p >= 1");
    }
    const BipartiteOperator op(g);
    LanczosProcess proc(op, std::vector<double>(op.dim(), 1.0), breakdown_tolerance(spectrum_interval(g)));
    proc.extend_to(p);
    return tridiag_eigen(proc.jacobi()).nodes;
}

} // namespace hubrank
