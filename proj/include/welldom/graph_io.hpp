#pragma once

#include <string>
#include <string_view>

#include "welldom/graph.hpp"

namespace welldom {

enum class GraphFormat { EdgeList, Graph6 };

/// Edge list: first line is the vertex count, each further non-empty line is
/// "u v" (0-based, single space). Lines starting with '#' are ignored.
/// Graph6: the standard printable encoding, up to 62 vertices, optional
/// ">>graph6<<" header.
/// Throws ParseError naming the line (edge list) or byte offset (graph6).
Graph parse_graph(std::string_view text, GraphFormat format);

/// Canonical form: edge list with sorted "u v" lines (u < v), one per line,
/// newline-terminated; graph6 without header or trailing newline.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Accepts "edgelist" or "graph6"; throws DomainError otherwise.
GraphFormat parse_format_name(std::string_view name);

}  // namespace welldom
