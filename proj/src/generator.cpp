#include "welldom/generator.hpp"

#include <algorithm>

#include "welldom/errors.hpp"
#include "welldom/graph_algorithms.hpp"

namespace welldom {

FamilyGenerator::FamilyGenerator(GeneratorConfig config) : config_(std::move(config)), rng_(config_.seed) {
  if (config_.min_n < 1 || config_.max_n < config_.min_n || config_.max_n > Graph::kMaxOrder) {
    throw DomainError("generator: need 1 <= min_n <= max_n <= 64");
  }
  if (config_.count < 0) throw DomainError("generator: count must be non-negative");
  for (int k : config_.forbidden_cycles) {
    if (k < 3) throw DomainError("generator: forbidden cycle lengths must be at least 3");
  }
}

int FamilyGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool FamilyGenerator::acceptable(const Graph& g) const {
  if (config_.connected && !is_connected(g)) return false;
  return std::none_of(config_.forbidden_cycles.begin(), config_.forbidden_cycles.end(),
                      [&](int k) { return contains_cycle_of_length(g, k); });
}

std::optional<Graph> FamilyGenerator::sparse_random(int n) {
  double pairs = n * (n - 1) / 2.0;
  double p = pairs > 0 ? std::min(1.0, 1.3 * n / pairs) : 0.0;
  std::bernoulli_distribution coin(p);
  for (int attempt = 0; attempt < kSparseAttempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng_)) g.add_edge(u, v);
    if (acceptable(g)) return g;
  }
  return std::nullopt;
}

Graph FamilyGenerator::random_tree(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(uniform(0, v - 1), v);
  return g;
}

Graph FamilyGenerator::tree_with_triangles(int n) {
  int triangles = n >= 3 ? uniform(0, n / 3) : 0;
  int base = n - triangles;
  Graph g = random_tree(base);
  Graph out(n);
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : edges) out.add_edge(u, v);
  std::shuffle(edges.begin(), edges.end(), rng_);
  for (int t = 0; t < triangles; ++t) {
    auto [u, v] = edges[t];
    out.add_edge(base + t, u);
    out.add_edge(base + t, v);
  }
  return out;
}

Graph FamilyGenerator::simplicial_partition(int n) {
  // Cliques of size 2 or 3 whose first vertex is the center; cells are joined
  // only through non-center vertices, so every center stays simplicial and
  // the cells partition V.
  Graph g(n);
  std::vector<std::vector<int>> cells;
  int next = 0;
  while (next < n) {
    int size = std::min(n - next, uniform(2, 3));
    if (size == 1 && !cells.empty()) {
      // attach the leftover vertex to an existing cell of size 2
      auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 2; });
      if (it != cells.end()) {
        for (int u : *it) g.add_edge(u, next);
        it->push_back(next++);
        continue;
      }
      // otherwise it becomes a pendant on a non-center vertex, breaking F
      g.add_edge(cells.back().back(), next++);
      continue;
    }
    std::vector<int> cell;
    for (int i = 0; i < size; ++i) cell.push_back(next++);
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j) g.add_edge(cell[i], cell[j]);
    if (!cells.empty() && size >= 2) {
      const auto& earlier = cells[uniform(0, static_cast<int>(cells.size()) - 1)];
      if (earlier.size() >= 2) {
        int a = earlier[uniform(1, static_cast<int>(earlier.size()) - 1)];
        int b = cell[uniform(1, size - 1)];
        g.add_edge(a, b);
      }
    }
    cells.push_back(std::move(cell));
  }
  // chords between non-center vertices, kept only when admissible
  std::vector<int> others;
  for (const auto& c : cells)
    for (std::size_t i = 1; i < c.size(); ++i) others.push_back(c[i]);
  int tries = others.size() >= 2 ? uniform(0, n / 2) : 0;
  for (int i = 0; i < tries; ++i) {
    int u = others[uniform(0, static_cast<int>(others.size()) - 1)];
    int v = others[uniform(0, static_cast<int>(others.size()) - 1)];
    if (u == v || g.adjacent(u, v)) continue;
    Graph h = g;
    h.add_edge(u, v);
    if (acceptable(h)) g = std::move(h);
  }
  return g;
}

Graph FamilyGenerator::grown(int n) {
  Graph g = random_tree(n);
  int tries = uniform(0, 2 * n);
  for (int i = 0; i < tries && n >= 2; ++i) {
    int u = uniform(0, n - 1);
    int v = uniform(0, n - 1);
    if (u == v || g.adjacent(u, v)) continue;
    Graph h = g;
    h.add_edge(u, v);
    if (acceptable(h)) g = std::move(h);
  }
  return g;
}

Graph FamilyGenerator::next() {
  int n = uniform(config_.min_n, config_.max_n);
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::optional<Graph> g;
    switch (uniform(0, 4)) {
      case 0: g = sparse_random(n); break;
      case 1: g = random_tree(n); break;
      case 2: g = tree_with_triangles(n); break;
      case 3: g = simplicial_partition(n); break;
      default: g = grown(n); break;
    }
    if (g && acceptable(*g)) return *std::move(g);
  }
  throw ResourceError("generator: rejection budget exhausted at n = " + std::to_string(n) +
                      "; lower max_n or the edge density");
}

std::vector<Graph> FamilyGenerator::generate() {
  std::vector<Graph> out;
  out.reserve(config_.count);
  for (int i = 0; i < config_.count; ++i) out.push_back(next());
  return out;
}

std::vector<Graph> generate_family(const GeneratorConfig& config) {
  return FamilyGenerator(config).generate();
}

}  // namespace welldom
