#include "welldom/graph_algorithms.hpp"

#include <algorithm>
#include <string>

#include "welldom/errors.hpp"

namespace welldom {
namespace {

void check_vertex(const Graph& g, int v) {
  if (!g.is_valid_vertex(v)) {
    throw DomainError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(g.order()) +
                      ")");
  }
}

void check_subset(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw DomainError("vertex set is not a subset of the graph");
}

// Extends the path ending at `last` to exactly k vertices, all greater than
// `start`, then checks the closing edge. Each cycle is found from its
// smallest vertex.
bool extend_path(const Graph& g, int start, int last, VertexSet used, int remaining) {
  if (remaining == 0) return g.adjacent(last, start);
  VertexSet next = g.neighbors(last) - used - VertexSet::range(start + 1);
  for (int v : next) {
    used.insert(v);
    if (extend_path(g, start, v, used, remaining - 1)) return true;
    used.erase(v);
  }
  return false;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // g vertices in assignment order
  std::vector<int> map;    // g -> h
  VertexSet used;

  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int x = 0; x < h.order(); ++x) {
      if (used.contains(x) || g.degree(v) != h.degree(x)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        int u = order[i];
        consistent = g.adjacent(u, v) == h.adjacent(map[u], x);
      }
      if (!consistent) continue;
      map[v] = x;
      used.insert(x);
      if (assign(depth + 1)) return true;
      used.erase(x);
    }
    return false;
  }
};

}  // namespace

std::vector<int> distances_from(const Graph& g, VertexSet s) {
  if (s.empty()) throw DomainError("distance to the empty set is undefined");
  check_subset(g, s);
  std::vector<int> dist(g.order(), -1);
  VertexSet frontier = s;
  VertexSet seen = s;
  for (int d = 0; !frontier.empty(); ++d) {
    for (int v : frontier) dist[v] = d;
    frontier = g.neighbors(frontier) - seen;
    seen |= frontier;
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  int d = distances_from(g, VertexSet::singleton(u))[v];
  if (d < 0) return std::nullopt;
  return d;
}

VertexSet n_exact(const Graph& g, VertexSet s, int i) {
  if (i < 0) throw DomainError("distance index must be non-negative");
  std::vector<int> dist = distances_from(g, s);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] == i) out.insert(v);
  }
  return out;
}

VertexSet n_ball(const Graph& g, VertexSet s, int i) {
  if (i < 0) throw DomainError("distance index must be non-negative");
  std::vector<int> dist = distances_from(g, s);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] >= 0 && dist[v] <= i) out.insert(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  check_subset(g, s);
  InducedSubgraph out{Graph(s.size()), std::vector<int>(g.order(), -1), s.members()};
  for (std::size_t i = 0; i < out.to_old.size(); ++i) out.to_new[out.to_old[i]] = static_cast<int>(i);
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) out.graph.add_edge(out.to_new[u], out.to_new[v]);
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : out.to_old) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  check_subset(g, within);
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.min());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = (g.neighbors(frontier) & within) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool contains_cycle_of_length(const Graph& g, int k) {
  if (k < 3) throw DomainError("cycle length must be at least 3, got " + std::to_string(k));
  if (k > g.order()) return false;
  for (int start = 0; start + k <= g.order(); ++start) {
    if (extend_path(g, start, start, VertexSet::singleton(start), k - 1)) return true;
  }
  return false;
}

bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.order() > kMaxIsomorphismOrder || h.order() > kMaxIsomorphismOrder) {
    throw DomainError("isomorphism test limited to " + std::to_string(kMaxIsomorphismOrder) +
                      " vertices");
  }
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto degree_sequence = [](const Graph& x) {
    std::vector<int> d;
    for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_sequence(g) != degree_sequence(h)) return false;

  IsoSearch search{g, h, {}, std::vector<int>(g.order(), -1), {}};
  // BFS order from high-degree vertices keeps earlier choices constraining later ones.
  VertexSet placed;
  while (placed.size() < g.order()) {
    int root = -1;
    for (int v : g.vertices() - placed) {
      if (root < 0 || g.degree(v) > g.degree(root)) root = v;
    }
    std::vector<int> queue{root};
    placed.insert(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int u : g.neighbors(queue[i]) - placed) {
        placed.insert(u);
        queue.push_back(u);
      }
    }
    search.order.insert(search.order.end(), queue.begin(), queue.end());
  }
  return search.assign(0);
}

}  // namespace welldom
