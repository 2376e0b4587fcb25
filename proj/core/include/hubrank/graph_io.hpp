#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "hubrank/graph.hpp"

namespace hubrank {

/// Numbering convention of node ids in an external file.
enum class IndexBase : int { zero = 0, one = 1 };

enum class GraphFormat { edge_list, matrix_market };

/**
 * Reads a whitespace-separated edge list: one "u v" or "u v w" per line.
 * Lines starting with '#' and blank lines are skipped. Node count is the
 * declared count when given, otherwise 1 + the largest index seen.
 *
 * Throws InputError naming the line number for malformed lines, negative
 * weights and indices outside the declared range, or when no node is present.
 */
DirectedGraph load_edge_list(std::istream& in, IndexBase base,
                             std::optional<std::size_t> declared_nodes = std::nullopt);

/// Reads a square Matrix Market coordinate file (pattern, real or integer
/// field; general or symmetric). Symmetric entries expand to both directions.
DirectedGraph load_matrix_market(std::istream& in);

/// Canonical 0-based, sorted edge list. Weights are written only for weighted
/// graphs. The first line records the node count as "# nodes <n>".
void write_edge_list(std::ostream& out, const DirectedGraph& g);

DirectedGraph load_graph(const std::filesystem::path& path, GraphFormat format, IndexBase base);

} // namespace hubrank
