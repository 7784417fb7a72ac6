#include "welldom/independent_sets.hpp"

#include <algorithm>

namespace welldom {
namespace {

struct MisEnumerator {
  const Graph& g;
  const SetVisitor& visit;

  // chosen: current independent set; candidates: vertices that may still be
  // added; excluded: vertices already branched on that may not be added.
  bool run(VertexSet chosen, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      return excluded.empty() ? visit(chosen) : true;
    }
    // Every maximal extension contains the pivot or one of its neighbors.
    int pivot = -1;
    int best = -1;
    for (int u : candidates | excluded) {
      int hits = (g.closed_neighborhood(u) & candidates).size();
      if (hits > best) {
        best = hits;
        pivot = u;
      }
    }
    for (int v : candidates & g.closed_neighborhood(pivot)) {
      VertexSet blocked = g.closed_neighborhood(v);
      if (!run(chosen | VertexSet::singleton(v), candidates - blocked, excluded - blocked)) return false;
      candidates.erase(v);
      excluded.insert(v);
    }
    return true;
  }
};

int max_independent(const Graph& g, VertexSet candidates, int current, int best) {
  if (candidates.empty()) return std::max(best, current);
  if (current + candidates.size() <= best) return best;
  int pick = -1;
  int pick_degree = -1;
  for (int v : candidates) {
    int d = (g.neighbors(v) & candidates).size();
    if (d <= 1) {
      // a vertex of degree <= 1 belongs to some maximum independent set
      return max_independent(g, candidates - g.closed_neighborhood(v), current + 1, best);
    }
    if (d > pick_degree) {
      pick_degree = d;
      pick = v;
    }
  }
  best = max_independent(g, candidates - g.closed_neighborhood(pick), current + 1, best);
  return max_independent(g, candidates - VertexSet::singleton(pick), current, best);
}

}  // namespace

bool for_each_maximal_independent_set(const Graph& g, VertexSet within, const SetVisitor& visit) {
  MisEnumerator e{g, visit};
  return e.run(VertexSet(), within & g.vertices(), VertexSet());
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_maximal_independent(const Graph& g, VertexSet s, VertexSet within) {
  return s.is_subset_of(within) && is_independent(g, s) &&
         within.is_subset_of(g.closed_neighborhood(s));
}

bool is_maximal_independent(const Graph& g, VertexSet s) {
  return is_maximal_independent(g, s, g.vertices());
}

VertexSet greedy_maximal_independent_set(const Graph& g, VertexSet within) {
  VertexSet out;
  VertexSet open = within;
  while (!open.empty()) {
    int v = open.min();
    out.insert(v);
    open -= g.closed_neighborhood(v);
  }
  return out;
}

int independence_number(const Graph& g, VertexSet within) {
  return max_independent(g, within & g.vertices(), 0, 0);
}

}  // namespace welldom
