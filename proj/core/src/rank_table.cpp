#include "hubrank/rank_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hubrank/error.hpp"

namespace hubrank {

bool scores_tied(double a, double b, double tol) noexcept
{
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool Diagnostics::has_flag(const std::string& flag) const
{
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

void Diagnostics::add_flag(std::string flag)
{
    if (!has_flag(flag)) {
        flags.push_back(std::move(flag));
    }
}

RankTable::RankTable(ScoreVector sv, double tie_tol) : sv_(std::move(sv))
{
    const auto& s = sv_.scores;
    for (double x : s) {
        if (!std::isfinite(x)) {
            throw NumericalError("cannot rank non-finite scores");
        }
    }
    std::vector<NodeId> idx(s.size());
    std::iota(idx.begin(), idx.end(), NodeId{0});
    std::stable_sort(idx.begin(), idx.end(), [&](NodeId a, NodeId b) { return s[a] > s[b]; });

    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k == 0 || !scores_tied(s[idx[k - 1]], s[idx[k]], tie_tol)) {
            groups_.emplace_back();
        }
        groups_.back().push_back(idx[k]);
    }
    order_.reserve(idx.size());
    for (auto& group : groups_) {
        std::sort(group.begin(), group.end());
        order_.insert(order_.end(), group.begin(), group.end());
    }
}

RankTable RankTable::from_scores(std::span<const double> scores, double tie_tol)
{
    ScoreVector sv;
    sv.scores.assign(scores.begin(), scores.end());
    return RankTable(std::move(sv), tie_tol);
}

std::vector<std::size_t> RankTable::ranks() const
{
    std::vector<std::size_t> r(order_.size());
    std::size_t position = 1;
    for (const auto& group : groups_) {
        for (NodeId v : group) {
            r[v] = position;
        }
        position += group.size();
    }
    return r;
}

} // namespace hubrank
