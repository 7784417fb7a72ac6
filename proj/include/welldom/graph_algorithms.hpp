#pragma once

#include <optional>
#include <vector>

#include "welldom/graph.hpp"

namespace welldom {

/// Shortest-path edge count; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

/// d(x, S) for every vertex x; -1 marks unreachable. Throws DomainError on
/// empty S.
std::vector<int> distances_from(const Graph& g, VertexSet s);

/// N_i(S) = {x : d(x, S) = i}.
VertexSet n_exact(const Graph& g, VertexSet s, int i);
/// N_i[S] = {x : d(x, S) <= i}.
VertexSet n_ball(const Graph& g, VertexSet s, int i);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_new;  // old index -> new index, -1 when dropped
  std::vector<int> to_old;  // new index -> old index
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced on `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// True iff g has a (not necessarily induced) cycle on exactly k vertices.
/// Throws DomainError for k < 3.
bool contains_cycle_of_length(const Graph& g, int k);

inline constexpr int kMaxIsomorphismOrder = 12;

/// Exact isomorphism test for graphs with at most 12 vertices.
bool is_isomorphic_small(const Graph& g, const Graph& h);

}  // namespace welldom
