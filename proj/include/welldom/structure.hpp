#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "welldom/budget.hpp"
#include "welldom/errors.hpp"
#include "welldom/graph.hpp"

namespace welldom {

/// Vertices whose closed neighborhood is a clique. Isolated vertices count.
VertexSet simplicial_vertices(const Graph& g);

/// Simplicial centers whose closed neighborhoods partition V(G).
struct FamilyFCertificate {
  std::vector<int> centers;
  std::vector<VertexSet> cells;  // cells[i] = N[centers[i]]
};

/// Exact-cover search over closed neighborhoods of simplicial vertices,
/// branching on the lowest uncovered vertex and trying centers in ascending
/// order. nullopt when g is not in the family.
std::optional<FamilyFCertificate> family_f_certificate(const Graph& g);

/// True iff `cert` is a valid certificate for g.
bool verify_family_f_certificate(const Graph& g, const FamilyFCertificate& cert);

/// Vertices of degree 1, plus degree-2 vertices lying on a triangle.
VertexSet l_set(const Graph& g);

/// D(v) = N(v) \ N(N_2(v)).
VertexSet d_set(const Graph& g, int v);

/// Raised by lstar_set when the enumeration budget runs out. Carries the
/// members confirmed so far and the vertex whose test was interrupted.
class LStarBudgetError : public ResourceError {
 public:
  LStarBudgetError(const std::string& what, VertexSet confirmed, int interrupted)
      : ResourceError(what), confirmed_(confirmed), interrupted_(interrupted) {}
  VertexSet confirmed() const { return confirmed_; }
  int interrupted_vertex() const { return interrupted_; }

 private:
  VertexSet confirmed_;
  int interrupted_;
};

/// Degree-1 vertices, plus every degree-2 triangle vertex v with N(v) =
/// {a, b} such that each maximal independent set of G - N_2[v] dominates
/// N(a) ∩ N_2(v) or N(b) ∩ N_2(v). Decided by enumeration with early exit;
/// budget.max_sets bounds the sets examined per vertex.
VertexSet lstar_set(const Graph& g, const EnumerationBudget& budget = {});

/// For a degree-2 triangle vertex v: whether the L* domination condition
/// holds, and if not the maximal independent set that violates it.
struct LStarWitness {
  bool holds = true;
  std::optional<VertexSet> violating_set;
};
LStarWitness lstar_condition(const Graph& g, int v, const EnumerationBudget& budget = {});

/// α of the whole graph, or of G[within].
int independence_number(const Graph& g);

struct StructureReport {
  VertexSet l;
  VertexSet lstar;
  std::map<int, VertexSet> d;                          // for v outside L
  std::map<int, std::pair<int, int>> triangle_partner;  // degree-2 triangle vertices in L
};

StructureReport structure_report(const Graph& g, const EnumerationBudget& budget = {});

}  // namespace welldom
