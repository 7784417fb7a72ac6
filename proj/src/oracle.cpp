#include "welldom/oracle.hpp"

#include <algorithm>
#include <string>

#include "welldom/errors.hpp"
#include "welldom/independent_sets.hpp"

namespace welldom {
namespace {

void check_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw ResourceError(std::string(what) + " enumeration budget exceeded: graph has " +
                        std::to_string(g.order()) + " vertices, limit is " + std::to_string(limit));
  }
}

[[noreturn]] void too_many_sets(const char* what, std::size_t limit) {
  throw ResourceError(std::string(what) + " enumeration budget exceeded: more than " +
                      std::to_string(limit) + " sets");
}

struct DominatingEnumerator {
  const Graph& g;
  std::size_t limit;
  std::vector<VertexSet> out;

  // Branch on which vertex of N[v] dominates the lowest undominated v.
  // Vertices passed over in earlier branches are forbidden, so every set is
  // produced along exactly one path.
  void run(VertexSet chosen, VertexSet dominated, VertexSet forbidden) {
    VertexSet open = g.vertices() - dominated;
    if (open.empty()) {
      if (is_minimal_dominating(g, chosen)) {
        if (out.size() == limit) too_many_sets("minimal dominating set", limit);
        out.push_back(chosen);
      }
      return;
    }
    int v = open.min();
    for (int u : g.closed_neighborhood(v) - forbidden) {
      VertexSet next = chosen | VertexSet::singleton(u);
      if (has_member_without_private_neighbor(next)) {
        forbidden.insert(u);
        continue;
      }
      run(next, dominated | g.closed_neighborhood(u), forbidden);
      forbidden.insert(u);
    }
  }

  // Private neighbors only disappear as the set grows, so a member without
  // one can never recover.
  bool has_member_without_private_neighbor(VertexSet s) const {
    for (int u : s) {
      VertexSet others = g.closed_neighborhood(s - VertexSet::singleton(u));
      if (g.closed_neighborhood(u).is_subset_of(others)) return true;
    }
    return false;
  }
};

}  // namespace

bool SetFamily::contains(VertexSet s) const { return std::binary_search(sets.begin(), sets.end(), s); }

int SetFamily::min_size() const {
  int best = VertexSet::kCapacity + 1;
  for (VertexSet s : sets) best = std::min(best, s.size());
  return best;
}

int SetFamily::max_size() const {
  int best = -1;
  for (VertexSet s : sets) best = std::max(best, s.size());
  return best;
}

bool is_dominating(const Graph& g, VertexSet s) {
  return s.is_subset_of(g.vertices()) && g.closed_neighborhood(s) == g.vertices();
}

bool is_minimal_dominating(const Graph& g, VertexSet s) {
  if (!is_dominating(g, s)) return false;
  for (int u : s) {
    VertexSet others = g.closed_neighborhood(s - VertexSet::singleton(u));
    if (g.closed_neighborhood(u).is_subset_of(others)) return false;
  }
  return true;
}

SetFamily enumerate_maximal_independent_sets(const Graph& g, const EnumerationBudget& budget) {
  check_order(g, budget.independent_max_order, "maximal independent set");
  SetFamily family{SetKind::MaximalIndependent, {}};
  for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet s) {
    if (family.sets.size() == budget.max_sets) too_many_sets("maximal independent set", budget.max_sets);
    family.sets.push_back(s);
    return true;
  });
  std::sort(family.sets.begin(), family.sets.end());
  family.sets.erase(std::unique(family.sets.begin(), family.sets.end()), family.sets.end());
  return family;
}

SetFamily enumerate_minimal_dominating_sets(const Graph& g, const EnumerationBudget& budget) {
  check_order(g, budget.dominating_max_order, "minimal dominating set");
  DominatingEnumerator e{g, budget.max_sets, {}};
  e.run(VertexSet(), VertexSet(), VertexSet());
  SetFamily family{SetKind::MinimalDominating, std::move(e.out)};
  std::sort(family.sets.begin(), family.sets.end());
  family.sets.erase(std::unique(family.sets.begin(), family.sets.end()), family.sets.end());
  return family;
}

DominationNumbers domination_numbers(const SetFamily& independent, const SetFamily& dominating) {
  return {dominating.min_size(), dominating.max_size(), independent.min_size(),
          independent.max_size()};
}

DominationNumbers domination_numbers(const Graph& g, const EnumerationBudget& budget) {
  return domination_numbers(enumerate_maximal_independent_sets(g, budget),
                            enumerate_minimal_dominating_sets(g, budget));
}

bool is_well_covered_oracle(const Graph& g, const EnumerationBudget& budget) {
  SetFamily f = enumerate_maximal_independent_sets(g, budget);
  return f.min_size() == f.max_size();
}

bool is_well_dominated_oracle(const Graph& g, const EnumerationBudget& budget) {
  SetFamily f = enumerate_minimal_dominating_sets(g, budget);
  return f.min_size() == f.max_size();
}

Rational weight_of(VertexSet s, std::span<const Rational> w) {
  Rational total = 0;
  for (int v : s) total += w[v];
  return total;
}

ExtremalWeights extremal_weights(const SetFamily& independent, const SetFamily& dominating,
                                 std::span<const Rational> w) {
  if (independent.sets.empty() || dominating.sets.empty()) {
    throw DomainError("extremal weights need non-empty families");
  }
  auto extremes = [&](const SetFamily& f) {
    Rational lo = weight_of(f.sets.front(), w);
    Rational hi = lo;
    for (VertexSet s : f.sets) {
      Rational x = weight_of(s, w);
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    return std::pair{lo, hi};
  };
  auto [mis_lo, mis_hi] = extremes(independent);
  auto [mds_lo, mds_hi] = extremes(dominating);
  return {mds_lo, mis_lo, mis_hi, mds_hi};
}

ExtremalWeights extremal_weights(const Graph& g, std::span<const Rational> w,
                                 const EnumerationBudget& budget) {
  if (static_cast<int>(w.size()) != g.order()) throw DomainError("weight vector length must equal graph order");
  return extremal_weights(enumerate_maximal_independent_sets(g, budget),
                          enumerate_minimal_dominating_sets(g, budget), w);
}

SubspaceBasis weight_space_from_family(const SetFamily& family, int order) {
  if (family.sets.empty()) throw DomainError("weight space of an empty family is undefined");
  auto n = static_cast<std::size_t>(order);
  RowSpace constraints(n);
  VertexSet first = family.sets.front();
  for (std::size_t i = 1; i < family.sets.size() && constraints.rank() < n; ++i) {
    RationalVector row(n, 0);
    for (int v : family.sets[i]) row[v] += 1;
    for (int v : first) row[v] -= 1;
    constraints.add(std::move(row));
  }
  return nullspace(constraints.matrix());
}

}  // namespace welldom
