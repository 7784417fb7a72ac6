#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "welldom/vertex_set.hpp"

namespace welldom {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with at most 64 vertices.
/// Adjacency is symmetric and loop-free by construction.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int order);
  /// Throws DomainError on loops or out-of-range endpoints. Duplicate edges
  /// collapse.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v] | VertexSet::singleton(v); }
  /// N(S): union of open neighborhoods.
  VertexSet neighbors(VertexSet s) const;
  /// N[S] = S ∪ N(S).
  VertexSet closed_neighborhood(VertexSet s) const { return neighbors(s) | s; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  bool is_valid_vertex(int v) const { return v >= 0 && v < order(); }

  void add_edge(int u, int v);
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Optional display names, indexed by vertex. Empty when unnamed.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int v) const;

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);

/// Relabels g so that old vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const int> perm);

}  // namespace welldom
