#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hubrank {

using NodeId = std::uint32_t;

/// Which role of a node is being scored.
enum class Side { hub, authority };

enum class Transpose : bool { no = false, yes = true };

const char* to_string(Side side);

struct Edge {
    NodeId source = 0;
    NodeId target = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Counters for the normalization applied while building a graph.
struct IngestStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
    std::size_t zero_weights_dropped = 0;
};

/**
 * Immutable sparse digraph with adjacency matrix A.
 *
 * Both A (forward, row i lists the targets of i) and its transpose (reverse,
 * row j lists the sources pointing at j) are stored in compressed row form.
 * Rows are sorted and duplicate-free, and there are no self-loops.
 */
class DirectedGraph {
public:
    /// Builds a graph over nodes [0, n). Self-loops are dropped, duplicate
    /// edges have their weights summed and explicit zero weights are dropped.
    /// Throws ParameterError if n == 0, an endpoint is >= n, or a weight is
    /// negative or non-finite.
    static DirectedGraph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return forward_.targets.size(); }
    /// True when some edge weight differs from 1.
    bool weighted() const noexcept { return weighted_; }

    std::span<const NodeId> successors(NodeId i) const noexcept { return forward_.row(i); }
    std::span<const double> successor_weights(NodeId i) const noexcept { return forward_.row_weights(i); }
    std::span<const NodeId> predecessors(NodeId j) const noexcept { return reverse_.row(j); }
    std::span<const double> predecessor_weights(NodeId j) const noexcept { return reverse_.row_weights(j); }

    std::size_t out_degree(NodeId i) const noexcept { return forward_.row(i).size(); }
    std::size_t in_degree(NodeId j) const noexcept { return reverse_.row(j).size(); }
    double weighted_out_degree(NodeId i) const noexcept;
    double weighted_in_degree(NodeId j) const noexcept;
    double max_weight() const noexcept { return max_weight_; }

    bool has_edge(NodeId i, NodeId j) const noexcept;

    const IngestStats& ingest_stats() const noexcept { return stats_; }

    /// Edges in canonical order: by source, then target.
    std::vector<Edge> edges() const;

    /// Relabels node i as perm[i]. perm must be a permutation of [0, n).
    DirectedGraph permuted(std::span<const NodeId> perm) const;

    /// Graph with every edge direction flipped (adjacency A^T).
    DirectedGraph reversed() const;

private:
    struct Compressed {
        std::vector<std::size_t> offsets;  // size n + 1
        std::vector<NodeId> targets;
        std::vector<double> weights;

        std::span<const NodeId> row(NodeId i) const noexcept {
            return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
        }
        std::span<const double> row_weights(NodeId i) const noexcept {
            return {weights.data() + offsets[i], offsets[i + 1] - offsets[i]};
        }
    };

    DirectedGraph() = default;

    std::size_t n_ = 0;
    Compressed forward_;
    Compressed reverse_;
    bool weighted_ = false;
    double max_weight_ = 0.0;
    IngestStats stats_;
};

struct DegreeVectors {
    std::vector<std::size_t> out;
    std::vector<std::size_t> in;
};

DegreeVectors degrees(const DirectedGraph& g);

/// y = A x (or A^T x). Summation follows the stored row order, so results are
/// reproducible bit for bit. Throws ParameterError on size mismatch.
void spmv(const DirectedGraph& g, std::span<const double> x, std::span<double> y,
          Transpose transpose = Transpose::no);
std::vector<double> spmv(const DirectedGraph& g, std::span<const double> x,
                         Transpose transpose = Transpose::no);

/// Dense copy of A. Intended for small graphs and cross-checks.
Eigen::MatrixXd dense_adjacency(const DirectedGraph& g);

/// Symmetric linear operator exposed through its action only.
class SymmetricOperator {
public:
    virtual ~SymmetricOperator() = default;
    virtual std::size_t dim() const noexcept = 0;
    /// y = M x; x and y have length dim() and do not alias.
    virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
};

/**
 * The 2n x 2n operator [[0, A], [A^T, 0]] of the bipartization of a digraph.
 *
 * Index i < n is node i in its hub role, n + i is node i as an authority.
 * The operator keeps a reference to the graph, which must outlive it.
 */
class BipartiteOperator final : public SymmetricOperator {
public:
    explicit BipartiteOperator(const DirectedGraph& g) noexcept : g_(&g) {}

    std::size_t dim() const noexcept override { return 2 * g_->node_count(); }
    void apply(std::span<const double> x, std::span<double> y) const override;

    const DirectedGraph& graph() const noexcept { return *g_; }
    std::size_t index_of(NodeId node, Side side) const noexcept {
        return side == Side::hub ? node : g_->node_count() + node;
    }
    Eigen::MatrixXd to_dense() const;

private:
    const DirectedGraph* g_;
};

BipartiteOperator bipartite_operator(const DirectedGraph& g);

/// Wraps an explicit symmetric matrix; used for small problems and tests.
class DenseSymmetricOperator final : public SymmetricOperator {
public:
    explicit DenseSymmetricOperator(Eigen::MatrixXd m);

    std::size_t dim() const noexcept override { return static_cast<std::size_t>(m_.rows()); }
    void apply(std::span<const double> x, std::span<double> y) const override;

    const Eigen::MatrixXd& matrix() const noexcept { return m_; }

private:
    Eigen::MatrixXd m_;
};

} // namespace hubrank
