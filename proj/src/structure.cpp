#include "welldom/structure.hpp"

#include "welldom/graph_algorithms.hpp"
#include "welldom/independent_sets.hpp"

namespace welldom {
namespace {

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s - VertexSet::singleton(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool on_triangle_with_degree_two(const Graph& g, int v) {
  if (g.degree(v) != 2) return false;
  VertexSet nb = g.neighbors(v);
  int a = nb.min();
  return g.neighbors(a).intersects(nb);
}

bool cover(const Graph& g, VertexSet simplicial, VertexSet covered, std::vector<int>& centers) {
  VertexSet open = g.vertices() - covered;
  if (open.empty()) return true;
  int v = open.min();
  // Some center's closed neighborhood must contain v, i.e. the center is in N[v].
  for (int x : g.closed_neighborhood(v) & simplicial) {
    VertexSet cell = g.closed_neighborhood(x);
    if (cell.intersects(covered)) continue;
    centers.push_back(x);
    if (cover(g, simplicial, covered | cell, centers)) return true;
    centers.pop_back();
  }
  return false;
}

}  // namespace

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.closed_neighborhood(v))) out.insert(v);
  }
  return out;
}

std::optional<FamilyFCertificate> family_f_certificate(const Graph& g) {
  std::vector<int> centers;
  if (!cover(g, simplicial_vertices(g), VertexSet(), centers)) return std::nullopt;
  FamilyFCertificate cert;
  cert.centers = centers;
  for (int x : centers) cert.cells.push_back(g.closed_neighborhood(x));
  return cert;
}

bool verify_family_f_certificate(const Graph& g, const FamilyFCertificate& cert) {
  if (cert.centers.size() != cert.cells.size()) return false;
  VertexSet simplicial = simplicial_vertices(g);
  VertexSet covered;
  for (std::size_t i = 0; i < cert.centers.size(); ++i) {
    int x = cert.centers[i];
    if (!g.is_valid_vertex(x) || !simplicial.contains(x)) return false;
    if (cert.cells[i] != g.closed_neighborhood(x) || cert.cells[i].intersects(covered)) return false;
    covered |= cert.cells[i];
  }
  return covered == g.vertices();
}

VertexSet l_set(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1 || on_triangle_with_degree_two(g, v)) out.insert(v);
  }
  return out;
}

VertexSet d_set(const Graph& g, int v) {
  if (!g.is_valid_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " out of range");
  VertexSet second = n_exact(g, VertexSet::singleton(v), 2);
  VertexSet out;
  for (int u : g.neighbors(v)) {
    if (!g.neighbors(u).intersects(second)) out.insert(u);
  }
  return out;
}

LStarWitness lstar_condition(const Graph& g, int v, const EnumerationBudget& budget) {
  if (!on_triangle_with_degree_two(g, v)) {
    throw DomainError("vertex " + std::to_string(v) + " is not a degree-2 triangle vertex");
  }
  VertexSet single = VertexSet::singleton(v);
  VertexSet second = n_exact(g, single, 2);
  VertexSet rest = g.vertices() - n_ball(g, single, 2);
  VertexSet nb = g.neighbors(v);
  int a = nb.min();
  int b = (nb - VertexSet::singleton(a)).min();
  VertexSet target_a = g.neighbors(a) & second;
  VertexSet target_b = g.neighbors(b) & second;

  LStarWitness result;
  std::size_t seen = 0;
  bool exhausted = false;
  for_each_maximal_independent_set(g, rest, [&](VertexSet s) {
    if (++seen > budget.max_sets) {
      exhausted = true;
      return false;
    }
    VertexSet reach = g.closed_neighborhood(s);
    if (!target_a.is_subset_of(reach) && !target_b.is_subset_of(reach)) {
      result.holds = false;
      result.violating_set = s;
      return false;
    }
    return true;
  });
  if (exhausted) {
    throw ResourceError("L* test for vertex " + std::to_string(v) + " exceeded " +
                        std::to_string(budget.max_sets) + " maximal independent sets");
  }
  return result;
}

VertexSet lstar_set(const Graph& g, const EnumerationBudget& budget) {
  VertexSet out;
  for (int v : l_set(g)) {
    if (g.degree(v) == 1) {
      out.insert(v);
      continue;
    }
    try {
      if (lstar_condition(g, v, budget).holds) out.insert(v);
    } catch (const ResourceError& e) {
      throw LStarBudgetError(e.what(), out, v);
    }
  }
  return out;
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

StructureReport structure_report(const Graph& g, const EnumerationBudget& budget) {
  StructureReport r;
  r.l = l_set(g);
  r.lstar = lstar_set(g, budget);
  for (int v = 0; v < g.order(); ++v) {
    if (!r.l.contains(v)) {
      r.d.emplace(v, d_set(g, v));
    } else if (g.degree(v) == 2) {
      VertexSet nb = g.neighbors(v);
      int a = nb.min();
      r.triangle_partner.emplace(v, std::pair{a, (nb - VertexSet::singleton(a)).min()});
    }
  }
  return r;
}

}  // namespace welldom
