#include "hubrank/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hubrank/error.hpp"

namespace hubrank {

const char* to_string(Side side)
{
    return side == Side::hub ? "hub" : "authority";
}

DirectedGraph DirectedGraph::from_edges(std::size_t n, std::vector<Edge> edges)
{
    if (n == 0) {
        throw ParameterError("graph must have at least one node");
    }
    if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw ParameterError("node count exceeds the supported index range");
    }

    DirectedGraph g;
    g.n_ = n;

    std::size_t kept = 0;
    for (const Edge& e : edges) {
        if (e.source >= n || e.target >= n) {
            throw ParameterError("edge endpoint " + std::to_string(std::max(e.source, e.target)) +
                                 " out of range for " + std::to_string(n) + " nodes");
        }
        if (!std::isfinite(e.weight) || e.weight < 0.0) {
            throw ParameterError("edge weights must be finite and nonnegative");
        }
        if (e.source == e.target) {
            ++g.stats_.self_loops_dropped;
            continue;
        }
        edges[kept++] = e;
    }
    edges.resize(kept);

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });

    // merge duplicates (weights summed), then drop explicit zeros
    std::vector<Edge> merged;
    merged.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!merged.empty() && merged.back().source == e.source && merged.back().target == e.target) {
            merged.back().weight += e.weight;
            ++g.stats_.duplicates_merged;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [&](const Edge& e) {
        if (e.weight == 0.0) {
            ++g.stats_.zero_weights_dropped;
            return true;
        }
        return false;
    });

    const std::size_t m = merged.size();
    auto build = [n, m](Compressed& c) {
        c.offsets.assign(n + 1, 0);
        c.targets.resize(m);
        c.weights.resize(m);
    };
    build(g.forward_);
    build(g.reverse_);

    for (const Edge& e : merged) {
        ++g.forward_.offsets[e.source + 1];
        ++g.reverse_.offsets[e.target + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.forward_.offsets[i + 1] += g.forward_.offsets[i];
        g.reverse_.offsets[i + 1] += g.reverse_.offsets[i];
    }

    // merged is sorted by (source, target), so filling in order keeps both
    // forward rows and reverse rows sorted.
    std::vector<std::size_t> fpos(g.forward_.offsets.begin(), g.forward_.offsets.end() - 1);
    std::vector<std::size_t> rpos(g.reverse_.offsets.begin(), g.reverse_.offsets.end() - 1);
    for (const Edge& e : merged) {
        const std::size_t f = fpos[e.source]++;
        g.forward_.targets[f] = e.target;
        g.forward_.weights[f] = e.weight;
        const std::size_t r = rpos[e.target]++;
        g.reverse_.targets[r] = e.source;
        g.reverse_.weights[r] = e.weight;
        g.weighted_ = g.weighted_ || e.weight != 1.0;
        g.max_weight_ = std::max(g.max_weight_, e.weight);
    }
    return g;
}

double DirectedGraph::weighted_out_degree(NodeId i) const noexcept
{
    double s = 0.0;
    for (double w : forward_.row_weights(i)) {
        s += w;
    }
    return s;
}

double DirectedGraph::weighted_in_degree(NodeId j) const noexcept
{
    double s = 0.0;
    for (double w : reverse_.row_weights(j)) {
        s += w;
    }
    return s;
}

bool DirectedGraph::has_edge(NodeId i, NodeId j) const noexcept
{
    if (i >= n_ || j >= n_) {
        return false;
    }
    const auto row = forward_.row(i);
    return std::binary_search(row.begin(), row.end(), j);
}

std::vector<Edge> DirectedGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId i = 0; i < n_; ++i) {
        const auto row = forward_.row(i);
        const auto w = forward_.row_weights(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out.push_back({i, row[k], w[k]});
        }
    }
    return out;
}

DirectedGraph DirectedGraph::permuted(std::span<const NodeId> perm) const
{
    if (perm.size() != n_) {
        throw ParameterError("permutation length does not match node count");
    }
    std::vector<bool> seen(n_, false);
    for (NodeId p : perm) {
        if (p >= n_ || seen[p]) {
            throw ParameterError("not a permutation of the node set");
        }
        seen[p] = true;
    }
    auto es = edges();
    for (Edge& e : es) {
        e.source = perm[e.source];
        e.target = perm[e.target];
    }
    return from_edges(n_, std::move(es));
}

DirectedGraph DirectedGraph::reversed() const
{
    auto es = edges();
    for (Edge& e : es) {
        std::swap(e.source, e.target);
    }
    return from_edges(n_, std::move(es));
}

DegreeVectors degrees(const DirectedGraph& g)
{
    const std::size_t n = g.node_count();
    DegreeVectors d{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
    for (NodeId i = 0; i < n; ++i) {
        d.out[i] = g.out_degree(i);
        d.in[i] = g.in_degree(i);
    }
    return d;
}

void spmv(const DirectedGraph& g, std::span<const double> x, std::span<double> y, Transpose transpose)
{
    const std::size_t n = g.node_count();
    if (x.size() != n || y.size() != n) {
        throw ParameterError("spmv: vector length " + std::to_string(x.size()) + " does not match " +
                             std::to_string(n) + " nodes");
    }
    const bool t = transpose == Transpose::yes;
    for (NodeId i = 0; i < n; ++i) {
        const auto cols = t ? g.predecessors(i) : g.successors(i);
        const auto w = t ? g.predecessor_weights(i) : g.successor_weights(i);
        double s = 0.0;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            s += w[k] * x[cols[k]];
        }
        y[i] = s;
    }
}

std::vector<double> spmv(const DirectedGraph& g, std::span<const double> x, Transpose transpose)
{
    std::vector<double> y(g.node_count());
    spmv(g, x, y, transpose);
    return y;
}

Eigen::MatrixXd dense_adjacency(const DirectedGraph& g)
{
    const auto n = static_cast<Eigen::Index>(g.node_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        a(e.source, e.target) = e.weight;
    }
    return a;
}

void BipartiteOperator::apply(std::span<const double> x, std::span<double> y) const
{
    const std::size_t n = g_->node_count();
    if (x.size() != 2 * n || y.size() != 2 * n) {
        throw ParameterError("bipartite operator: vector length mismatch");
    }
    // top = A * x_bottom, bottom = A^T * x_top
    spmv(*g_, x.subspan(n, n), y.subspan(0, n), Transpose::no);
    spmv(*g_, x.subspan(0, n), y.subspan(n, n), Transpose::yes);
}

Eigen::MatrixXd BipartiteOperator::to_dense() const
{
    const auto n = static_cast<Eigen::Index>(g_->node_count());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    const Eigen::MatrixXd a = dense_adjacency(*g_);
    m.topRightCorner(n, n) = a;
    m.bottomLeftCorner(n, n) = a.transpose();
    return m;
}

BipartiteOperator bipartite_operator(const DirectedGraph& g)
{
    return BipartiteOperator(g);
}

DenseSymmetricOperator::DenseSymmetricOperator(Eigen::MatrixXd m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols()) {
        throw ParameterError("dense operator must be square");
    }
    if (!m_.isApprox(m_.transpose(), 1e-14) && m_.size() > 0 && m_.norm() > 0.0) {
        throw ParameterError("dense operator must be symmetric");
    }
}

void DenseSymmetricOperator::apply(std::span<const double> x, std::span<double> y) const
{
    if (x.size() != dim() || y.size() != dim()) {
        throw ParameterError("dense operator: vector length mismatch");
    }
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::Map<Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    yv.noalias() = m_ * xv;
}

} // namespace hubrank
