#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hubrank/expm.hpp"
#include "hubrank/graph.hpp"
#include "hubrank/quadrature.hpp"
#include "hubrank/rank_table.hpp"

namespace hubrank {

struct HubAuthority {
    ScoreVector hub;
    ScoreVector authority;

    const ScoreVector& get(Side side) const noexcept { return side == Side::hub ? hub : authority; }
};

// Flags reported in Diagnostics::flags.
inline constexpr const char* kFlagDegenerate = "degenerate-dominant-singular-value";
inline constexpr const char* kFlagNotConverged = "not-converged";
inline constexpr const char* kFlagUnresolved = "unresolved-brackets";
inline constexpr const char* kFlagAmbiguousTruncation = "ambiguous-truncation";

struct HitsOptions {
    double tol = 1e-10;
    std::size_t max_iter = 1000;
    /// Starting authority vector; empty means the constant vector.
    std::vector<double> init;
};

/**
 * Kleinberg's alternating iteration y <- A x, x <- A^T y with 2-norm
 * normalization, stopped when both iterates change by less than tol in the
 * max-norm. Reported scores are rescaled to sum to one. The degeneracy flag
 * is raised when sigma1 - sigma2 < tol * sigma1, in which case the result
 * depends on the starting vector.
 */
HubAuthority hits(const DirectedGraph& g, const HitsOptions& opts = {});

/// Diagonal blocks of e^{[[0,A],[A^T,0]]}, i.e. cosh(sqrt(AA^T)) and
/// cosh(sqrt(A^TA)), from the dense Padé exponential. Needs 2n <= kDenseThreshold.
HubAuthority exp_centrality_exact(const DirectedGraph& g);

struct QuadratureOptions {
    std::size_t p_max = 63;
    /// Stop refining a node once upper - lower <= width_tol * max(1, lower).
    double width_tol = 1e-6;
    std::size_t threads = 1;
};

struct QuadratureScores {
    HubAuthority scores;
    std::vector<NodeBounds> hub_bounds;
    std::vector<NodeBounds> authority_bounds;
};

/// Midpoints of Gauss-Radau brackets on the bipartite diagonal, refined with
/// p = 3, 5, 7, ... up to p_max.
QuadratureScores exp_centrality_quadrature(const DirectedGraph& g, const QuadratureOptions& opts = {});

struct TruncatedOptions {
    enum class Solver { automatic, dense, subspace };
    Solver solver = Solver::automatic;
    double tol = 1e-10;
    std::size_t max_iter = 20000;
};

/// Diagonal of sum_{i<=k} e^{lambda_i} u_i u_i^T over the k largest
/// eigenpairs of the bipartite operator, built from singular triplets of A.
HubAuthority truncated_spectral_scores(const DirectedGraph& g, std::size_t k, const TruncatedOptions& opts = {});

struct KatzOptions {
    /// Defaults to 1 / (rho(A) + 0.1).
    std::optional<double> c;
    /// Bound on ||1 + cAy - y||_inf for the returned y.
    double tol = 1e-10;
    std::size_t max_iter = 1000000;
};

/// Solves (I - cA) y = 1 (hubs) and (I - cA^T) x = 1 (authorities) by the
/// fixed-point iteration y <- 1 + cAy.
HubAuthority katz_row_col(const DirectedGraph& g, const KatzOptions& opts = {});

enum class EvaluationMode { automatic, dense, quadrature };

struct ResolventOptions {
    /// Defaults to 0.9 / sigma1.
    std::optional<double> c;
    EvaluationMode mode = EvaluationMode::automatic;
    QuadratureOptions quadrature{.p_max = 201, .width_tol = 1e-12, .threads = 1};
};

/// Diagonals of (I - c^2 AA^T)^{-1} (hubs) and (I - c^2 A^TA)^{-1}
/// (authorities), requires 0 < c < 1/sigma1.
HubAuthority resolvent_bipartite(const DirectedGraph& g, const ResolventOptions& opts = {});

/// Row sums (hubs) and column sums (authorities) of e^A.
HubAuthority expA_row_col_sums(const DirectedGraph& g, ExpmActionMethod method = ExpmActionMethod::taylor);

struct PageRankOptions {
    double alpha = 0.85;
    double tol = 1e-14;
    std::size_t max_iter = 10000;
    /// Run on the edge-reversed graph (Reverse PageRank, a hub score).
    bool reverse = false;
};

/// Stationary vector of alpha * Pbar + (1 - alpha) ee^T / n, where Pbar
/// replaces empty rows of the transition matrix by e^T / n.
ScoreVector pagerank(const DirectedGraph& g, const PageRankOptions& opts = {});

/// Out-degree (hubs) and in-degree (authorities) counts.
HubAuthority degree_scores(const DirectedGraph& g);

enum class CommunicabilityKind { hub, authority, hub_authority };

/// [e^calA]_{i,j}, [e^calA]_{n+i,n+j} or [e^calA]_{i,n+j}. The quadrature
/// mode polarizes two Gauss estimates with p Lanczos steps each.
double communicability(const DirectedGraph& g, NodeId i, NodeId j, CommunicabilityKind kind,
                       EvaluationMode mode = EvaluationMode::dense, std::size_t p = 30);

/// Method selection shared by the command-line tool and the test suites.
struct MethodConfig {
    std::string id;  // one of method_ids()
    std::optional<double> c;
    double alpha = 0.85;
    std::optional<double> tol;
    std::size_t p_max = 63;
    double width_tol = 1e-6;
    std::size_t k = 1;  // terms kept by "truncated"
    std::size_t threads = 1;
};

const std::vector<std::string>& method_ids();

/// Runs one method and returns the scores for the requested side. For
/// "pagerank" the authority side is PageRank and the hub side Reverse PageRank.
ScoreVector rank_nodes(const DirectedGraph& g, const MethodConfig& config, Side side);

} // namespace hubrank
