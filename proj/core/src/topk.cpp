#include "hubrank/topk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <numeric>

#include "hubrank/error.hpp"
#include "parallel.hpp"

namespace hubrank {
namespace {

enum class Eligibility { candidate, zero_degree, excluded };

std::vector<Eligibility> classify(const DirectedGraph& g, Side side, ExclusionPolicy policy)
{
    std::vector<Eligibility> cls(g.node_count(), Eligibility::candidate);
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const std::size_t deg = side == Side::hub ? g.out_degree(i) : g.in_degree(i);
        if (policy == ExclusionPolicy::degree_one && g.in_degree(i) == 1 && g.out_degree(i) == 1) {
            cls[i] = Eligibility::excluded;
        } else if (deg == 0) {
            cls[i] = Eligibility::zero_degree;
        }
    }
    return cls;
}

// Bracket can no longer shrink in floating point.
bool collapsed(const NodeBounds& b)
{
    return b.exact || b.width() <= 1e-13 * std::max(1.0, std::abs(b.upper));
}

class Selector {
public:
    Selector(const DirectedGraph& g, std::size_t k, std::size_t m, const TopKOptions& opts)
        : g_(g), op_(g), k_(k), m_(m), opts_(opts)
    {
        const std::size_t n = g.node_count();
        if (opts.p_start == 0 || opts.p_max < opts.p_start) {
            throw ParameterError("top-k needs 1 <= p_start <= p_max");
        }
        if (!(opts.tie_tol >= 0.0)) {
            throw ParameterError("tie tolerance must be nonnegative");
        }
        cls_ = classify(g, opts.side, opts.exclusion);
        const auto eligible = static_cast<std::size_t>(
            std::count_if(cls_.begin(), cls_.end(), [](Eligibility e) { return e != Eligibility::excluded; }));
        if (k == 0 || k > eligible) {
            throw ParameterError("k = " + std::to_string(k) + " must lie in [1, " + std::to_string(eligible) +
                                 "] (eligible " + to_string(opts.side) + " nodes)");
        }
        if (m < k || m > eligible) {
            throw ParameterError("m = " + std::to_string(m) + " must lie in [k, " + std::to_string(eligible) + "]");
        }
        report_.side = opts.side;
        report_.k = k;
        report_.m = m;
        report_.bounds.resize(n);
        report_.excluded.assign(n, false);
        procs_.resize(n);
        for (NodeId i = 0; i < n; ++i) {
            report_.bounds[i].node = i;
            if (cls_[i] == Eligibility::excluded) {
                report_.excluded[i] = true;
                ++report_.excluded_degree_one;
            } else if (cls_[i] == Eligibility::zero_degree) {
                ++report_.excluded_zero_degree;
            }
        }
        if (g.edge_count() > 0) {
            iv_ = spectrum_interval(g);
        }
        breakdown_tol_ = breakdown_tolerance(iv_);
    }

    TopKReport run()
    {
        const std::size_t n = g_.node_count();
        std::vector<NodeId> alive;
        std::vector<NodeId> start;
        for (NodeId i = 0; i < n; ++i) {
            if (cls_[i] == Eligibility::excluded) {
                continue;
            }
            alive.push_back(i);
            if (cls_[i] == Eligibility::zero_degree) {
                // e^0 on an isolated vertex of the bipartite graph
                NodeBounds& b = report_.bounds[i];
                b.lower = b.upper = 1.0;
                b.exact = true;
            } else {
                start.push_back(i);
            }
        }
        refine(start, opts_.p_start);

        for (;;) {
            TopKRound round;
            round.candidates_before = alive.size();
            const double threshold = kth_lower(alive);
            const double slack = opts_.tie_tol * std::max(1.0, std::abs(threshold));
            std::vector<NodeId> survivors;
            for (NodeId i : alive) {
                if (report_.bounds[i].upper >= threshold - slack) {
                    survivors.push_back(i);
                } else {
                    procs_[i].reset();
                }
            }
            alive.swap(survivors);
            round.candidates_after = alive.size();
            round.threshold = threshold;
            if (alive.size() <= m_) {
                report_.rounds.push_back(round);
                report_.certified = true;
                break;
            }
            std::vector<NodeId> todo;
            for (NodeId i : alive) {
                if (refinable(i)) {
                    todo.push_back(i);
                }
            }
            round.refined = todo.size();
            report_.rounds.push_back(round);
            if (todo.empty()) {
                break;
            }
            refine(todo, 2);
        }

        report_.candidates = alive;
        select_members(alive);
        if (!report_.certified) {
            describe_ties(alive);
        }
        if (opts_.order_members) {
            order_members();
        } else {
            report_.fully_ordered = members_ordered();
        }
        return std::move(report_);
    }

private:
    bool refinable(NodeId i) const
    {
        return procs_[i] && !collapsed(report_.bounds[i]) && report_.bounds[i].p < opts_.p_max;
    }

    // Extends each listed node by `steps` Lanczos steps (the first call
    // creates the processes) and recomputes its bracket.
    void refine(const std::vector<NodeId>& nodes, std::size_t steps)
    {
        const std::size_t n = g_.node_count();
        const std::size_t budget = opts_.memory_budget_bytes / sizeof(double);
        std::atomic<std::size_t> replays{0};
        detail::parallel_for(nodes.size(), opts_.threads, [&](std::size_t t) {
            const NodeId i = nodes[t];
            const std::size_t index = opts_.side == Side::hub ? i : n + i;
            if (!procs_[i]) {
                procs_[i] = std::make_unique<LanczosProcess>(op_, index, breakdown_tol_);
            }
            LanczosProcess& proc = *procs_[i];
            if (!proc.has_basis()) {
                replays.fetch_add(1);
            }
            const std::size_t target = std::min(proc.steps() + steps, opts_.p_max);
            proc.extend_to(target);
            NodeBounds b = radau_bounds(proc, i, iv_, MatrixFunction::exponential());
            b.node = i;
            report_.bounds[i] = b;

            const std::size_t held = proc.basis_size_doubles();
            if (retained_.fetch_add(held) + held > budget) {
                proc.release_basis();
                retained_.fetch_sub(held);
            }
        });
        report_.replays += replays.load();
        // recount so that released and discarded processes are not double counted
        std::size_t total = 0;
        for (const auto& p : procs_) {
            if (p) {
                total += p->basis_size_doubles();
            }
        }
        retained_.store(total);
    }

    double kth_lower(const std::vector<NodeId>& alive) const
    {
        std::vector<double> lows;
        lows.reserve(alive.size());
        for (NodeId i : alive) {
            lows.push_back(report_.bounds[i].lower);
        }
        std::nth_element(lows.begin(), lows.begin() + static_cast<std::ptrdiff_t>(k_ - 1), lows.end(),
                         std::greater<>());
        return lows[k_ - 1];
    }

    std::vector<NodeId> ranked(const std::vector<NodeId>& nodes) const
    {
        std::vector<double> mid(nodes.size());
        for (std::size_t t = 0; t < nodes.size(); ++t) {
            mid[t] = report_.bounds[nodes[t]].midpoint();
        }
        // nodes are ascending, so local positions order like the ids
        const RankTable table = RankTable::from_scores(mid, opts_.tie_tol);
        std::vector<NodeId> out;
        out.reserve(nodes.size());
        for (NodeId t : table.order()) {
            out.push_back(nodes[t]);
        }
        return out;
    }

    void select_members(const std::vector<NodeId>& alive)
    {
        std::vector<NodeId> order = ranked(alive);
        order.resize(k_);
        report_.members = std::move(order);
    }

    void describe_ties(const std::vector<NodeId>& alive)
    {
        const double last = report_.bounds[report_.members.back()].midpoint();
        for (NodeId i : alive) {
            const bool member =
                std::find(report_.members.begin(), report_.members.end(), i) != report_.members.end();
            const NodeBounds& b = report_.bounds[i];
            if (!member || scores_tied(b.midpoint(), last, opts_.tie_tol)) {
                report_.unresolved_ties.push_back(i);
            }
        }
        bool all_collapsed = true;
        for (NodeId i : alive) {
            all_collapsed = all_collapsed && collapsed(report_.bounds[i]);
        }
        report_.tie_note = std::to_string(alive.size()) + " candidates remain for " + std::to_string(m_) +
                           " slots; " +
                           (all_collapsed ? "their scores agree to the tie tolerance, members chosen by ascending id"
                                          : "p_max reached before the brackets separated");
    }

    bool members_ordered() const
    {
        const auto& mem = report_.members;
        for (std::size_t t = 0; t + 1 < mem.size(); ++t) {
            const NodeBounds& a = report_.bounds[mem[t]];
            const NodeBounds& b = report_.bounds[mem[t + 1]];
            const bool separated = a.lower >= b.upper;
            const bool tied = collapsed(a) && collapsed(b) && scores_tied(a.midpoint(), b.midpoint(), opts_.tie_tol);
            if (!separated && !tied) {
                return false;
            }
        }
        return true;
    }

    void order_members()
    {
        for (;;) {
            report_.members = ranked(sorted(report_.members));
            std::vector<NodeId> todo;
            const auto& mem = report_.members;
            for (std::size_t t = 0; t + 1 < mem.size(); ++t) {
                const NodeBounds& a = report_.bounds[mem[t]];
                const NodeBounds& b = report_.bounds[mem[t + 1]];
                if (a.lower < b.upper) {
                    for (NodeId i : {mem[t], mem[t + 1]}) {
                        if (refinable(i) && std::find(todo.begin(), todo.end(), i) == todo.end()) {
                            todo.push_back(i);
                        }
                    }
                }
            }
            if (todo.empty()) {
                break;
            }
            std::sort(todo.begin(), todo.end());
            refine(todo, 2);
        }
        report_.fully_ordered = members_ordered();
    }

    static std::vector<NodeId> sorted(std::vector<NodeId> v)
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    const DirectedGraph& g_;
    BipartiteOperator op_;
    std::size_t k_;
    std::size_t m_;
    TopKOptions opts_;
    std::vector<Eligibility> cls_;
    SpectrumInterval iv_;
    double breakdown_tol_ = 0.0;
    std::vector<std::unique_ptr<LanczosProcess>> procs_;
    std::atomic<std::size_t> retained_{0};
    TopKReport report_;
};

} // namespace

std::vector<std::size_t> TopKReport::iterations() const
{
    std::vector<std::size_t> it(bounds.size());
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        it[i] = bounds[i].p;
    }
    return it;
}

std::size_t TopKReport::max_iterations() const
{
    std::size_t best = 0;
    for (const auto& b : bounds) {
        best = std::max(best, b.p);
    }
    return best;
}

std::size_t TopKReport::total_iterations() const
{
    std::size_t total = 0;
    for (const auto& b : bounds) {
        total += b.p;
    }
    return total;
}

std::size_t eligible_count(const DirectedGraph& g, Side side, ExclusionPolicy policy)
{
    const auto cls = classify(g, side, policy);
    return static_cast<std::size_t>(
        std::count_if(cls.begin(), cls.end(), [](Eligibility e) { return e != Eligibility::excluded; }));
}

TopKReport identify_top_k(const DirectedGraph& g, std::size_t k, const TopKOptions& opts)
{
    return Selector(g, k, k, opts).run();
}

TopKReport rank_in_top_m(const DirectedGraph& g, std::size_t k, std::size_t m, const TopKOptions& opts)
{
    return Selector(g, k, m, opts).run();
}

} // namespace hubrank
