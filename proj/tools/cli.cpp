#include "hubrank_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hubrank/analysis.hpp"
#include "hubrank/error.hpp"
#include "hubrank/graph_io.hpp"
#include "hubrank/rankers.hpp"
#include "hubrank/topk.hpp"

namespace hubrank::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string format = "auto";
    int base = 1;
    std::string side = "hub";
    std::string out;
    bool json = false;
    std::optional<std::size_t> top;
    std::size_t threads = 1;
    std::optional<double> tol;
    std::size_t pmax = 63;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::optional<double> c;
    double alpha = 0.85;
    std::string precision = "4";

    std::vector<std::string> methods;
    std::vector<std::size_t> ks;
    std::string exclude = "none";
    bool order = false;
    std::optional<std::size_t> ritz;
};

struct Loaded {
    DirectedGraph graph;
    int base;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--input", o.input, "Graph file")->required();
    cmd->add_option("--format", o.format, "edgelist, mtx, or auto (by extension)")
        ->check(CLI::IsMember({"auto", "edgelist", "mtx"}));
    cmd->add_option("--base", o.base, "Index base of node ids in an edge list")->check(CLI::IsMember({0, 1}));
    cmd->add_option("--side", o.side, "hub or authority")->check(CLI::IsMember({"hub", "authority"}));
    cmd->add_option("--out", o.out, "Write results to this file instead of stdout");
    cmd->add_flag("--json", o.json, "JSON instead of CSV");
    cmd->add_option("--top", o.top, "Print only the first N rows");
    cmd->add_option("--threads", o.threads, "Worker threads for per-node quadrature");
    cmd->add_option("--tol", o.tol, "Convergence tolerance of the selected method");
    cmd->add_option("--pmax", o.pmax, "Largest number of Lanczos steps per node");
    cmd->add_option("--k", o.k, "Top-k size, or terms kept by the truncated method");
    cmd->add_option("--m", o.m, "Certify the top k within the top m");
    cmd->add_option("--c", o.c, "Katz or resolvent parameter");
    cmd->add_option("--alpha", o.alpha, "PageRank damping factor");
    cmd->add_option("--precision", o.precision, "4 (decimals) or full (12 significant digits)")
        ->check(CLI::IsMember({"4", "full"}));
}

void validate(const Options& o)
{
    auto fail = [](const std::string& what) { throw ParameterError(what); };
    if (!(o.alpha > 0.0 && o.alpha < 1.0)) {
        fail("--alpha must lie in (0, 1)");
    }
    if (o.threads == 0) {
        fail("--threads must be at least 1");
    }
    if (o.pmax == 0) {
        fail("--pmax must be at least 1");
    }
    if (o.tol && !(*o.tol > 0.0)) {
        fail("--tol must be positive");
    }
    if (o.c && !(*o.c > 0.0)) {
        fail("--c must be positive");
    }
    if (o.top && *o.top == 0) {
        fail("--top must be at least 1");
    }
    if (o.k && *o.k == 0) {
        fail("--k must be at least 1");
    }
}

Loaded load(const Options& o)
{
    bool mtx = o.format == "mtx";
    if (o.format == "auto") {
        mtx = std::filesystem::path(o.input).extension() == ".mtx";
    }
    if (mtx) {
        return {load_graph(o.input, GraphFormat::matrix_market, IndexBase::one), 1};
    }
    return {load_graph(o.input, GraphFormat::edge_list, o.base == 0 ? IndexBase::zero : IndexBase::one), o.base};
}

Side side_of(const Options& o)
{
    return o.side == "hub" ? Side::hub : Side::authority;
}

MethodConfig method_config(const Options& o, const std::string& method)
{
    MethodConfig cfg;
    cfg.id = method;
    cfg.c = o.c;
    cfg.alpha = o.alpha;
    cfg.tol = o.tol;
    cfg.p_max = o.pmax;
    cfg.threads = o.threads;
    cfg.k = o.k.value_or(1);
    if (method == "exp-quad" && o.tol) {
        cfg.width_tol = *o.tol;
    }
    return cfg;
}

std::string number(double x, bool full)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, full ? "%.12g" : "%.4f", x);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

// JSON numbers are parsed back from the printed text so both renderings agree.
Json json_number(const std::string& text)
{
    return Json::parse(text);
}

Json json_value(double x)
{
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return json_number(number(x, true));
}

Json diagnostics_json(const Diagnostics& d)
{
    Json j;
    j["iterations"] = d.iterations;
    j["residual"] = json_value(d.residual);
    j["converged"] = d.converged;
    j["flags"] = d.flags;
    Json values = Json::object();
    for (const auto& [key, v] : d.values) {
        values[key] = json_value(v);
    }
    j["values"] = values;
    return j;
}

Json parameters_json(const std::map<std::string, double>& params)
{
    Json j = Json::object();
    for (const auto& [key, v] : params) {
        j[key] = json_value(v);
    }
    return j;
}

Json graph_json(const Loaded& in)
{
    return {{"nodes", in.graph.node_count()}, {"edges", in.graph.edge_count()}, {"index_base", in.base}};
}

void warn(const ScoreVector& sv, std::ostream& err)
{
    for (const auto& flag : sv.diagnostics.flags) {
        err << "warning: " << sv.method << " (" << to_string(sv.side) << "): " << flag << '\n';
    }
}

std::size_t node_label(NodeId i, const Loaded& in)
{
    return static_cast<std::size_t>(i) + static_cast<std::size_t>(in.base);
}

void cmd_rank(const Options& o, std::ostream& buf, std::ostream& err)
{
    if (o.methods.size() != 1) {
        throw ParameterError("rank takes exactly one --method");
    }
    validate(o);
    const Loaded in = load(o);
    const bool full = o.precision == "full";
    const ScoreVector sv = rank_nodes(in.graph, method_config(o, o.methods[0]), side_of(o));
    warn(sv, err);
    const RankTable table(sv);
    const auto ranks = table.ranks();
    const std::size_t rows = std::min(table.size(), o.top.value_or(table.size()));

    if (o.json) {
        Json j;
        j["command"] = "rank";
        j["graph"] = graph_json(in);
        j["method"] = sv.method;
        j["side"] = to_string(sv.side);
        j["parameters"] = parameters_json(sv.parameters);
        j["diagnostics"] = diagnostics_json(sv.diagnostics);
        Json list = Json::array();
        for (std::size_t r = 0; r < rows; ++r) {
            const NodeId v = table.order()[r];
            list.push_back({{"node", node_label(v, in)},
                            {"score", json_number(number(sv.scores[v], full))},
                            {"rank", ranks[v]}});
        }
        j["rows"] = list;
        buf << j.dump(2) << '\n';
        return;
    }
    buf << "node,score,rank\n";
    for (std::size_t r = 0; r < rows; ++r) {
        const NodeId v = table.order()[r];
        buf << node_label(v, in) << ',' << number(sv.scores[v], full) << ',' << ranks[v] << '\n';
    }
}

void cmd_topk(const Options& o, std::ostream& buf)
{
    validate(o);
    if (!o.k) {
        throw ParameterError("topk needs --k");
    }
    const Loaded in = load(o);
    const bool full = o.precision == "full";
    TopKOptions opts;
    opts.side = side_of(o);
    opts.p_max = o.pmax;
    opts.p_start = std::min<std::size_t>(3, o.pmax);
    opts.threads = o.threads;
    opts.order_members = o.order;
    opts.exclusion = o.exclude == "degree-one" ? ExclusionPolicy::degree_one : ExclusionPolicy::none;
    const std::size_t k = *o.k;
    const TopKReport r = rank_in_top_m(in.graph, k, o.m.value_or(k), opts);

    std::vector<double> mids;
    for (NodeId v : r.members) {
        mids.push_back(r.bounds[v].midpoint());
    }
    const auto ranks = RankTable::from_scores(mids).ranks();
    std::map<std::size_t, std::size_t> histogram;
    for (const auto& b : r.bounds) {
        if (b.p > 0) {
            ++histogram[b.p];
        }
    }
    const std::size_t rows = std::min(r.members.size(), o.top.value_or(r.members.size()));

    if (o.json) {
        Json j;
        j["command"] = "topk";
        j["graph"] = graph_json(in);
        j["side"] = to_string(r.side);
        j["k"] = r.k;
        j["m"] = r.m;
        j["certified"] = r.certified;
        j["fully_ordered"] = r.fully_ordered;
        Json members = Json::array();
        for (std::size_t t = 0; t < rows; ++t) {
            const NodeBounds& b = r.bounds[r.members[t]];
            members.push_back({{"node", node_label(r.members[t], in)},
                               {"score", json_number(number(b.midpoint(), full))},
                               {"rank", ranks[t]},
                               {"lower", json_number(number(b.lower, full))},
                               {"upper", json_number(number(b.upper, full))},
                               {"iterations", b.p},
                               {"exact", b.exact}});
        }
        j["members"] = members;
        Json candidates = Json::array();
        for (NodeId v : r.candidates) {
            candidates.push_back(node_label(v, in));
        }
        j["candidates"] = candidates;
        Json ties = Json::array();
        for (NodeId v : r.unresolved_ties) {
            ties.push_back(node_label(v, in));
        }
        j["unresolved_ties"] = ties;
        j["tie_note"] = r.tie_note;
        j["excluded"] = {{"zero_degree", r.excluded_zero_degree}, {"degree_one", r.excluded_degree_one}};
        j["rounds"] = r.rounds.size();
        j["iterations"] = {{"max", r.max_iterations()}, {"total", r.total_iterations()}};
        Json hist = Json::object();
        for (const auto& [p, count] : histogram) {
            hist[std::to_string(p)] = count;
        }
        j["iteration_histogram"] = hist;
        j["iterations_per_node"] = r.iterations();
        buf << j.dump(2) << '\n';
        return;
    }
    buf << "# side: " << to_string(r.side) << '\n';
    buf << "# k: " << r.k << ", m: " << r.m << '\n';
    buf << "# certified: " << (r.certified ? "true" : "false") << '\n';
    buf << "# fully_ordered: " << (r.fully_ordered ? "true" : "false") << '\n';
    buf << "# iterations: max " << r.max_iterations() << ", total " << r.total_iterations() << ", rounds "
        << r.rounds.size() << '\n';
    buf << "# iteration_histogram:";
    for (const auto& [p, count] : histogram) {
        buf << ' ' << p << ':' << count;
    }
    buf << '\n';
    buf << "# excluded: zero-degree " << r.excluded_zero_degree << ", degree-one " << r.excluded_degree_one << '\n';
    if (!r.tie_note.empty()) {
        buf << "# ties: " << r.tie_note << '\n';
    }
    buf << "node,score,rank,lower,upper,iterations,exact\n";
    for (std::size_t t = 0; t < rows; ++t) {
        const NodeBounds& b = r.bounds[r.members[t]];
        buf << node_label(r.members[t], in) << ',' << number(b.midpoint(), full) << ',' << ranks[t] << ','
            << number(b.lower, full) << ',' << number(b.upper, full) << ',' << b.p << ','
            << (b.exact ? "true" : "false") << '\n';
    }
}

void cmd_compare(const Options& o, std::ostream& buf, std::ostream& err)
{
    if (o.methods.size() != 2) {
        throw ParameterError("compare takes exactly two --method values");
    }
    validate(o);
    const Loaded in = load(o);
    const bool full = o.precision == "full";
    const std::size_t n = in.graph.node_count();
    std::vector<std::size_t> ks = o.ks;
    if (ks.empty()) {
        for (std::size_t k : {std::size_t{1}, std::size_t{5}, std::size_t{10}, n}) {
            if (k <= n && (ks.empty() || ks.back() < k)) {
                ks.push_back(k);
            }
        }
        if (ks.back() > 10) {
            ks.pop_back();
        }
    }
    const ScoreVector a = rank_nodes(in.graph, method_config(o, o.methods[0]), side_of(o));
    const ScoreVector b = rank_nodes(in.graph, method_config(o, o.methods[1]), side_of(o));
    warn(a, err);
    warn(b, err);
    const ComparisonReport r = compare(RankTable(a), RankTable(b), ks);

    auto labels = [&](const std::vector<NodeId>& nodes) {
        std::vector<std::size_t> out;
        for (NodeId v : nodes) {
            out.push_back(node_label(v, in));
        }
        return out;
    };
    if (o.json) {
        Json j;
        j["command"] = "compare";
        j["graph"] = graph_json(in);
        j["side"] = o.side;
        j["method_a"] = r.method_a;
        j["method_b"] = r.method_b;
        j["kendall_tau_b"] = json_number(number(r.kendall_tau_b, full));
        Json overlaps = Json::array();
        for (std::size_t t = 0; t < r.ks.size(); ++t) {
            overlaps.push_back({{"k", r.ks[t]},
                                {"overlap", json_number(number(r.overlap[t], full))},
                                {"top_a", labels(r.top_a[t])},
                                {"top_b", labels(r.top_b[t])}});
        }
        j["overlap_at_k"] = overlaps;
        buf << j.dump(2) << '\n';
        return;
    }
    auto joined = [&](const std::vector<NodeId>& nodes) {
        std::string s;
        for (std::size_t label : labels(nodes)) {
            s += (s.empty() ? "" : " ") + std::to_string(label);
        }
        return s;
    };
    buf << "metric,value\n";
    buf << "method_a," << r.method_a << '\n';
    buf << "method_b," << r.method_b << '\n';
    buf << "side," << o.side << '\n';
    buf << "kendall_tau_b," << number(r.kendall_tau_b, full) << '\n';
    for (std::size_t t = 0; t < r.ks.size(); ++t) {
        buf << "overlap_at_" << r.ks[t] << ',' << number(r.overlap[t], full) << '\n';
    }
    for (std::size_t t = 0; t < r.ks.size(); ++t) {
        buf << "top_" << r.ks[t] << "_a," << joined(r.top_a[t]) << '\n';
        buf << "top_" << r.ks[t] << "_b," << joined(r.top_b[t]) << '\n';
    }
}

void cmd_spectrum(const Options& o, std::ostream& buf)
{
    validate(o);
    const Loaded in = load(o);
    const bool full = o.precision == "full";
    const GapReport gap = spectral_gap(in.graph);
    const double symmetry = symmetry_fraction(in.graph);
    std::optional<double> estrada;
    if (in.graph.node_count() <= kDenseThreshold) {
        estrada = estrada_index(in.graph);
    }
    std::vector<double> ritz;
    if (o.ritz) {
        ritz = ritz_values(in.graph, *o.ritz);
    }

    if (o.json) {
        Json j;
        j["command"] = "spectrum";
        j["graph"] = graph_json(in);
        j["sigma1"] = json_number(number(gap.sigma1, full));
        j["sigma2"] = json_number(number(gap.sigma2, full));
        j["relative_gap"] = json_number(number(gap.relative_gap, full));
        j["degenerate"] = gap.degenerate;
        j["converged"] = gap.converged;
        j["annotation"] = gap.annotation;
        j["symmetry_fraction"] = json_number(number(symmetry, full));
        j["estrada_index"] = estrada ? json_number(number(*estrada, full)) : Json(nullptr);
        if (o.ritz) {
            Json values = Json::array();
            for (double t : ritz) {
                values.push_back(json_number(number(t, full)));
            }
            j["ritz_values"] = values;
        }
        buf << j.dump(2) << '\n';
        return;
    }
    buf << "metric,value\n";
    buf << "nodes," << in.graph.node_count() << '\n';
    buf << "edges," << in.graph.edge_count() << '\n';
    buf << "sigma1," << number(gap.sigma1, full) << '\n';
    buf << "sigma2," << number(gap.sigma2, full) << '\n';
    buf << "relative_gap," << number(gap.relative_gap, full) << '\n';
    buf << "degenerate," << (gap.degenerate ? "true" : "false") << '\n';
    buf << "annotation,\"" << gap.annotation << "\"\n";
    buf << "symmetry_fraction," << number(symmetry, full) << '\n';
    if (estrada) {
        buf << "estrada_index," << number(*estrada, full) << '\n';
    }
    for (double t : ritz) {
        buf << "ritz," << number(t, full) << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app("Hub and authority rankings of directed graphs", "hubrank");
    app.require_subcommand(1);
    Options o;

    auto* rank = app.add_subcommand("rank", "Score and rank every node");
    add_common(rank, o);
    rank->add_option("--method", o.methods, "Ranking method")
        ->required()
        ->check(CLI::IsMember(method_ids()));

    auto* topk = app.add_subcommand("topk", "Certified top-k by bound pruning");
    add_common(topk, o);
    topk->add_option("--exclude", o.exclude, "none or degree-one")->check(CLI::IsMember({"none", "degree-one"}));
    topk->add_flag("--order", o.order, "Refine until the members are strictly ordered");

    auto* cmp = app.add_subcommand("compare", "Compare the rankings of two methods");
    add_common(cmp, o);
    cmp->add_option("--method", o.methods, "Two ranking methods")->required()->check(CLI::IsMember(method_ids()));
    cmp->add_option("--ks", o.ks, "Overlap depths")->delimiter(',');

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Singular value gap and spectral summaries");
    add_common(spectrum_cmd, o);
    spectrum_cmd->add_option("--ritz", o.ritz, "Also print Ritz values after this many Lanczos steps");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParameterError;
    }

    std::ostringstream buf;
    try {
        if (rank->parsed()) {
            cmd_rank(o, buf, err);
        } else if (topk->parsed()) {
            cmd_topk(o, buf);
        } else if (cmp->parsed()) {
            cmd_compare(o, buf, err);
        } else {
            cmd_spectrum(o, buf);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << '\n';
        return kParameterError;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    }

    if (o.out.empty()) {
        out << buf.str();
        return kOk;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << buf.str())) {
        err << "error: cannot write '" << o.out << "'\n";
        return kInputError;
    }
    return kOk;
}

} // namespace hubrank::cli
