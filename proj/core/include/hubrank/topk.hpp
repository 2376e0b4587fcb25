#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hubrank/graph.hpp"
#include "hubrank/quadrature.hpp"
#include "hubrank/rank_table.hpp"

namespace hubrank {

/// Nodes left out of the candidate set before any Lanczos work.
enum class ExclusionPolicy {
    none,
    /// Also drop nodes with in-degree 1 and out-degree 1. Heuristic: such a
    /// node is almost never a top hub or authority, but this is not proven.
    degree_one,
};

struct TopKOptions {
    Side side = Side::hub;
    std::size_t p_start = 3;
    std::size_t p_max = 63;
    ExclusionPolicy exclusion = ExclusionPolicy::none;
    /// Refine the members after selection until their brackets are disjoint.
    bool order_members = false;
    double tie_tol = kTieTolerance;
    std::size_t threads = 1;
    /// Cap on retained Lanczos vectors; processes over budget drop their
    /// basis and replay the recurrence when refined again.
    std::size_t memory_budget_bytes = std::size_t{512} << 20;
};

struct TopKRound {
    std::size_t candidates_before = 0;
    std::size_t candidates_after = 0;
    double threshold = 0.0;  // k-th largest lower bound
    std::size_t refined = 0;
};

struct TopKReport {
    Side side = Side::hub;
    std::size_t k = 0;
    std::size_t m = 0;
    /// Top k in descending order of bracket midpoint, ties by ascending id.
    std::vector<NodeId> members;
    /// Survivors at termination, ascending ids. Contains every true top-k node.
    std::vector<NodeId> candidates;
    /// |candidates| <= m was reached.
    bool certified = false;
    /// Adjacent members have disjoint (or collapsed, tied) brackets.
    bool fully_ordered = false;
    /// Per node, indexed by id. Nodes never expanded have p = 0.
    std::vector<NodeBounds> bounds;
    std::vector<bool> excluded;
    std::size_t excluded_zero_degree = 0;
    std::size_t excluded_degree_one = 0;
    std::vector<TopKRound> rounds;
    /// Candidates still competing for the last member slots when no bracket
    /// could be refined further; empty when the selection is certified.
    std::vector<NodeId> unresolved_ties;
    std::string tie_note;
    /// Lanczos recurrences replayed after a basis was released.
    std::size_t replays = 0;

    /// Lanczos steps per node (0 for nodes scored without Lanczos).
    std::vector<std::size_t> iterations() const;
    std::size_t max_iterations() const;
    std::size_t total_iterations() const;
};

/// Nodes that can be selected under the policy for the given side.
std::size_t eligible_count(const DirectedGraph& g, Side side, ExclusionPolicy policy);

/**
 * Certified top-k of the exponential hub or authority scores.
 *
 * Every eligible node starts with a Gauss-Radau bracket at p_start steps.
 * Each round takes L, the k-th largest lower bound among the candidates,
 * discards candidates whose upper bound lies below L (less the tie slack),
 * and extends the Lanczos process of every remaining candidate by two steps.
 * Nodes with no out-edges (hubs) or no in-edges (authorities) have the exact
 * score 1 and never run Lanczos. Throws ParameterError unless
 * 1 <= k <= eligible_count().
 */
TopKReport identify_top_k(const DirectedGraph& g, std::size_t k, const TopKOptions& opts = {});

/**
 * Stops as soon as at most m candidates survive, which certifies that the
 * true top k lie within those m. The rounds are the same as for
 * identify_top_k, so a larger m never costs a node more iterations.
 * m == k gives exactly identify_top_k.
 */
TopKReport rank_in_top_m(const DirectedGraph& g, std::size_t k, std::size_t m, const TopKOptions& opts = {});

} // namespace hubrank
