// Test-only reference implementations. Everything here works from the raw
// definitions by exhausting subsets or permutations and shares no code path
// with the library's enumerators.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "welldom/graph.hpp"

namespace brute {

using welldom::Graph;
using welldom::VertexSet;

inline bool independent(const Graph& g, std::uint64_t mask) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((mask >> u) & 1)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((mask >> v) & 1) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline bool dominating(const Graph& g, std::uint64_t mask) {
  for (int x = 0; x < g.order(); ++x) {
    bool hit = (mask >> x) & 1;
    for (int u = 0; u < g.order() && !hit; ++u) hit = ((mask >> u) & 1) && g.adjacent(u, x);
    if (!hit) return false;
  }
  return true;
}

/// Maximal independent sets of G, by checking every subset and every
/// single-vertex extension.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (!independent(g, m)) continue;
    bool maximal = true;
    for (int v = 0; v < g.order() && maximal; ++v) {
      if (!((m >> v) & 1) && independent(g, m | (std::uint64_t{1} << v))) maximal = false;
    }
    if (maximal) out.emplace_back(m);
  }
  return out;
}

/// Minimal dominating sets: dominating and no single removal dominates
/// (domination is monotone, so this is inclusion-minimality).
inline std::vector<VertexSet> minimal_dominating_sets(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (!dominating(g, m)) continue;
    bool minimal = true;
    for (int v = 0; v < g.order() && minimal; ++v) {
      if (((m >> v) & 1) && dominating(g, m & ~(std::uint64_t{1} << v))) minimal = false;
    }
    if (minimal) out.emplace_back(m);
  }
  return out;
}

inline int independence_number(const Graph& g, VertexSet within) {
  int best = 0;
  std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m) {
    if ((m & ~within.bits()) == 0 && independent(g, m)) best = std::max(best, std::popcount(m));
  }
  return best;
}

/// Cycle on exactly k vertices: some k-subset whose induced edges contain a
/// Hamiltonian cycle, found by trying all orderings that start at the
/// subset's smallest vertex.
inline bool has_cycle(const Graph& g, int k) {
  int n = g.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (pick[i]) verts.push_back(i);
    std::sort(verts.begin() + 1, verts.end());
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.adjacent(verts[i], verts[(i + 1) % k]);
      if (ok) return true;
    } while (std::next_permutation(verts.begin() + 1, verts.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

/// Family F by trying every subset of simplicial vertices as the centers.
inline bool in_family_f(const Graph& g) {
  std::vector<int> simplicial;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet nb = g.closed_neighborhood(v);
    bool clique = true;
    for (int a : nb)
      for (int b : nb)
        if (a < b && !g.adjacent(a, b)) clique = false;
    if (clique) simplicial.push_back(v);
  }
  std::uint64_t limit = std::uint64_t{1} << simplicial.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::uint64_t covered = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < simplicial.size() && disjoint; ++i) {
      if (!((m >> i) & 1)) continue;
      std::uint64_t cell = g.closed_neighborhood(simplicial[i]).bits();
      disjoint = (covered & cell) == 0;
      covered |= cell;
    }
    if (disjoint && covered == g.vertices().bits()) return true;
  }
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace brute
