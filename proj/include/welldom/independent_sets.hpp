#pragma once

#include <functional>

#include "welldom/graph.hpp"

namespace welldom {

/// Visitor returns false to stop the enumeration early.
using SetVisitor = std::function<bool(VertexSet)>;

/// Calls `visit` once for every maximal independent set of the subgraph
/// induced on `within` (Bron-Kerbosch with pivoting on the complement).
/// The empty set is reported once when `within` is empty.
/// Returns false if the visitor stopped the run.
bool for_each_maximal_independent_set(const Graph& g, VertexSet within, const SetVisitor& visit);

bool is_independent(const Graph& g, VertexSet s);
/// Independent and not extendable inside `within`.
bool is_maximal_independent(const Graph& g, VertexSet s, VertexSet within);
bool is_maximal_independent(const Graph& g, VertexSet s);

/// Greedy maximal independent set of G[within], scanning in ascending index.
VertexSet greedy_maximal_independent_set(const Graph& g, VertexSet within);

/// Size of a maximum independent set (branch and bound).
int independence_number(const Graph& g, VertexSet within);

}  // namespace welldom
