#pragma once

#include <span>
#include <vector>

#include "welldom/budget.hpp"
#include "welldom/graph.hpp"
#include "welldom/linalg.hpp"

namespace welldom {

enum class SetKind { MaximalIndependent, MinimalDominating };

/// Complete family of vertex sets in ascending bitmask order, no duplicates.
struct SetFamily {
  SetKind kind = SetKind::MaximalIndependent;
  std::vector<VertexSet> sets;

  bool contains(VertexSet s) const;
  int min_size() const;
  int max_size() const;
};

bool is_dominating(const Graph& g, VertexSet s);
/// Dominating, and every member has a private neighbor: some x in N[u] not
/// dominated by S - {u}.
bool is_minimal_dominating(const Graph& g, VertexSet s);

/// Throws ResourceError if the graph order or the family size exceeds the
/// budget.
SetFamily enumerate_maximal_independent_sets(const Graph& g, const EnumerationBudget& budget = {});
SetFamily enumerate_minimal_dominating_sets(const Graph& g, const EnumerationBudget& budget = {});

struct DominationNumbers {
  int gamma = 0;         // minimum dominating set size
  int upper_gamma = 0;   // largest minimal dominating set
  int independent = 0;   // i(G), smallest maximal independent set
  int alpha = 0;         // largest independent set

  friend bool operator==(const DominationNumbers&, const DominationNumbers&) = default;
};

DominationNumbers domination_numbers(const SetFamily& independent, const SetFamily& dominating);
DominationNumbers domination_numbers(const Graph& g, const EnumerationBudget& budget = {});

bool is_well_covered_oracle(const Graph& g, const EnumerationBudget& budget = {});
bool is_well_dominated_oracle(const Graph& g, const EnumerationBudget& budget = {});

/// Extremal weights over the enumerated families. MIS is taken over maximal
/// independent sets, and mDS/MDS over minimal dominating sets.
struct ExtremalWeights {
  Rational min_dominating;
  Rational min_independent;
  Rational max_independent;
  Rational max_dominating;
};

Rational weight_of(VertexSet s, std::span<const Rational> w);
ExtremalWeights extremal_weights(const SetFamily& independent, const SetFamily& dominating,
                                 std::span<const Rational> w);
ExtremalWeights extremal_weights(const Graph& g, std::span<const Rational> w,
                                 const EnumerationBudget& budget = {});

/// {w : w(S) is the same for every S in the family}, as the nullspace of the
/// rows χ(S_i) - χ(S_1). Throws DomainError on an empty family.
SubspaceBasis weight_space_from_family(const SetFamily& family, int order);

}  // namespace welldom
