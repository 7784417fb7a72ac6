#include "welldom/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "welldom/errors.hpp"

namespace welldom {
namespace {

constexpr int kGraph6MaxOrder = 62;

bool parse_index(std::string_view token, int& out) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

Graph parse_edge_list(std::string_view text) {
  int order = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (order < 0) {
      if (!parse_index(line, order)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count, got '" +
                         std::string(line) + "'", line_no);
      }
      if (order > Graph::kMaxOrder) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex count " +
                         std::to_string(order) + " exceeds " + std::to_string(Graph::kMaxOrder),
                         line_no);
      }
      continue;
    }
    std::size_t space = line.find(' ');
    int u = 0;
    int v = 0;
    if (space == std::string_view::npos || !parse_index(line.substr(0, space), u) ||
        !parse_index(line.substr(space + 1), v)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got '" +
                       std::string(line) + "'", line_no);
    }
    if (u >= order || v >= order) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range [0, " +
                       std::to_string(order) + ")", line_no);
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u),
                       line_no);
    }
    edges.emplace_back(u, v);
  }
  if (order < 0) throw ParseError("missing vertex count line", line_no);
  return Graph(order, edges);
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 1, static_cast<int>(base));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < 63 || text[i] > 126) {
      throw ParseError("graph6: byte " + std::to_string(base + i) + " is not in [63, 126]", 1,
                       static_cast<int>(base + i));
    }
  }
  int order = text[0] - 63;
  if (order > kGraph6MaxOrder) {
    throw ParseError("graph6: only orders up to 62 are supported", 1, static_cast<int>(base));
  }
  std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for order " +
                     std::to_string(order) + ", got " + std::to_string(text.size()),
                     1, static_cast<int>(base + std::min(text.size(), expected)));
  }
  Graph g(order);
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // padding bits must be zero
  for (; k % 6 != 0; ++k) {
    int byte = text[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1) {
      throw ParseError("graph6: nonzero padding bit", 1, static_cast<int>(base + 1 + k / 6));
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) throw DomainError("graph6: only orders up to 62 are supported");
  std::string out(1, static_cast<char>(g.order() + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return serialize_graph6(g);
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw DomainError("unknown graph format '" + std::string(name) + "'");
}

}  // namespace welldom
