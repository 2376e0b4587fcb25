#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hubrank/graph.hpp"

namespace hubrank {

/// Scores within this relative distance are tied: |a - b| <= tol * max(1, |a|, |b|).
inline constexpr double kTieTolerance = 1e-8;

bool scores_tied(double a, double b, double tol = kTieTolerance) noexcept;

struct Diagnostics {
    std::size_t iterations = 0;
    double residual = 0.0;
    bool converged = true;
    std::vector<std::string> flags;
    std::map<std::string, double> values;

    bool has_flag(const std::string& flag) const;
    void add_flag(std::string flag);
};

/// Per-node scores produced by one ranking method for one role.
struct ScoreVector {
    std::string method;
    std::map<std::string, double> parameters;
    Side side = Side::hub;
    std::vector<double> scores;
    Diagnostics diagnostics;
};

/**
 * Tie-aware ranking induced by a score vector: nodes by descending score,
 * grouped into maximal runs whose neighbouring scores are tied, ids
 * ascending inside each group.
 */
class RankTable {
public:
    explicit RankTable(ScoreVector sv, double tie_tol = kTieTolerance);
    static RankTable from_scores(std::span<const double> scores, double tie_tol = kTieTolerance);

    const std::vector<NodeId>& order() const noexcept { return order_; }
    const std::vector<std::vector<NodeId>>& groups() const noexcept { return groups_; }
    const ScoreVector& source() const noexcept { return sv_; }
    std::size_t size() const noexcept { return order_.size(); }

    /// 1-based rank per node; tied nodes share the rank of the group's first position.
    std::vector<std::size_t> ranks() const;

    /// Same node set with the same sequence of tie groups.
    bool same_ranking(const RankTable& other) const noexcept { return groups_ == other.groups_; }

private:
    ScoreVector sv_;
    std::vector<NodeId> order_;
    std::vector<std::vector<NodeId>> groups_;
};

} // namespace hubrank
