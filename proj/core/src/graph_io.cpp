#include "hubrank/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hubrank/error.hpp"

namespace hubrank {
namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

template <class T>
bool parse_number(std::string_view tok, T& value)
{
    if (!tok.empty() && tok.front() == '+') {
        tok.remove_prefix(1);
    }
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    return ec == std::errc() && ptr == end;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& what)
{
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

// "# nodes <n>" records a node count in canonical files
std::optional<std::size_t> declared_count_comment(std::string_view line)
{
    const auto tokens = split_ws(line.substr(1));
    std::size_t n = 0;
    if (tokens.size() == 2 && tokens[0] == "nodes" && parse_number(tokens[1], n)) {
        return n;
    }
    return std::nullopt;
}

} // namespace

DirectedGraph load_edge_list(std::istream& in, IndexBase base, std::optional<std::size_t> declared_nodes)
{
    const long long offset = static_cast<int>(base);
    std::optional<std::size_t> declared = declared_nodes;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    long long max_index = -1;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') {
            view.remove_suffix(1);
        }
        const auto first = view.find_first_not_of(" \t");
        if (first == std::string_view::npos) {
            continue;
        }
        view.remove_prefix(first);
        if (view.front() == '#') {
            if (!declared_nodes) {
                if (auto n = declared_count_comment(view)) {
                    declared = *n;
                }
            }
            continue;
        }

        const auto tokens = split_ws(view);
        if (tokens.size() != 2 && tokens.size() != 3) {
            fail_at(line_no, "expected 'u v' or 'u v w', got " + std::to_string(tokens.size()) + " tokens");
        }
        long long u = 0;
        long long v = 0;
        if (!parse_number(tokens[0], u) || !parse_number(tokens[1], v)) {
            fail_at(line_no, "node ids must be integers");
        }
        double w = 1.0;
        if (tokens.size() == 3) {
            if (!parse_number(tokens[2], w) || !std::isfinite(w)) {
                fail_at(line_no, "weight is not a finite number");
            }
            if (w < 0.0) {
                fail_at(line_no, "negative edge weight");
            }
        }
        u -= offset;
        v -= offset;
        if (u < 0 || v < 0) {
            fail_at(line_no, "node id below index base " + std::to_string(offset));
        }
        if (u > std::numeric_limits<NodeId>::max() || v > std::numeric_limits<NodeId>::max()) {
            fail_at(line_no, "node id too large");
        }
        max_index = std::max({max_index, u, v});
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
        edge_lines.push_back(line_no);
    }

    std::size_t n = static_cast<std::size_t>(max_index + 1);
    if (declared) {
        if (max_index >= 0 && static_cast<std::size_t>(max_index) >= *declared) {
            for (std::size_t k = 0; k < edges.size(); ++k) {
                if (std::max(edges[k].source, edges[k].target) >= *declared) {
                    fail_at(edge_lines[k], "node id out of declared range of " + std::to_string(*declared) + " nodes");
                }
            }
        }
        n = *declared;
    }
    if (n == 0) {
        throw InputError("edge list contains no nodes");
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph load_matrix_market(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw InputError("empty Matrix Market stream");
    }
    ++line_no;

    const auto header = split_ws(line);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix") {
        fail_at(line_no, "missing '%%MatrixMarket matrix' header");
    }
    const std::string format = lower(header[2]);
    const std::string field = lower(header[3]);
    const std::string symmetry = lower(header[4]);
    if (format != "coordinate") {
        fail_at(line_no, "unsupported Matrix Market format '" + format + "' (only coordinate)");
    }
    if (field != "pattern" && field != "real" && field != "integer") {
        fail_at(line_no, "unsupported Matrix Market field '" + field + "'");
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        fail_at(line_no, "unsupported Matrix Market symmetry '" + symmetry + "'");
    }
    const bool pattern = field == "pattern";
    const bool symmetric = symmetry == "symmetric";

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
    bool have_size = false;
    while (!have_size && std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '%') {
            continue;
        }
        if (tokens.size() != 3 || !parse_number(tokens[0], rows) || !parse_number(tokens[1], cols) ||
            !parse_number(tokens[2], nnz)) {
            fail_at(line_no, "malformed size line");
        }
        have_size = true;
    }
    if (!have_size) {
        throw InputError("Matrix Market stream has no size line");
    }
    if (rows != cols) {
        fail_at(line_no, "dimension mismatch: adjacency matrix must be square, got " + std::to_string(rows) + "x" +
                             std::to_string(cols));
    }
    if (rows == 0) {
        throw InputError("Matrix Market matrix has no rows");
    }

    std::vector<Edge> edges;
    edges.reserve(symmetric ? 2 * nnz : nnz);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '%') {
            continue;
        }
        const std::size_t expected = pattern ? 2 : 3;
        if (tokens.size() != expected) {
            fail_at(line_no, "expected " + std::to_string(expected) + " tokens per entry");
        }
        std::size_t i = 0;
        std::size_t j = 0;
        if (!parse_number(tokens[0], i) || !parse_number(tokens[1], j)) {
            fail_at(line_no, "entry indices must be positive integers");
        }
        if (i < 1 || j < 1 || i > rows || j > cols) {
            fail_at(line_no, "entry index out of range for " + std::to_string(rows) + "x" + std::to_string(cols));
        }
        double w = 1.0;
        if (!pattern && (!parse_number(tokens[2], w) || !std::isfinite(w))) {
            fail_at(line_no, "entry value is not a finite number");
        }
        if (w < 0.0) {
            fail_at(line_no, "negative edge weight");
        }
        ++seen;
        const auto u = static_cast<NodeId>(i - 1);
        const auto v = static_cast<NodeId>(j - 1);
        edges.push_back({u, v, w});
        if (symmetric && u != v) {
            edges.push_back({v, u, w});
        }
    }
    if (seen != nnz) {
        throw InputError("dimension mismatch: header declares " + std::to_string(nnz) + " entries, found " +
                         std::to_string(seen));
    }
    return DirectedGraph::from_edges(rows, std::move(edges));
}

void write_edge_list(std::ostream& out, const DirectedGraph& g)
{
    out << "# nodes " << g.node_count() << '\n';
    std::ostringstream buf;
    buf.precision(17);
    for (const Edge& e : g.edges()) {
        buf << e.source << ' ' << e.target;
        if (g.weighted()) {
            buf << ' ' << e.weight;
        }
        buf << '\n';
    }
    out << buf.str();
}

DirectedGraph load_graph(const std::filesystem::path& path, GraphFormat format, IndexBase base)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return format == GraphFormat::matrix_market ? load_matrix_market(in) : load_edge_list(in, base);
}

} // namespace hubrank
