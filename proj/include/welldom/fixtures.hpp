#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "welldom/analysis.hpp"
#include "welldom/graph.hpp"

namespace welldom {

enum class Provenance { Paper, Trivial, Derived };
const char* to_string(Provenance p);

/// Rows spanning an expected subspace, as integers.
using SpanRows = std::vector<std::vector<std::int64_t>>;

/// One named assertion about a fixture. Keys:
///   order, size, gamma, upper_gamma, i, alpha, wcw_dim, wwd_dim,
///   mis_count                                    -> integer
///   well_covered, well_dominated, connected      -> bool
///   L, L_star, simplicial, mis_sizes             -> integer list (set)
///   mds_contains, mis_contains                   -> integer list (one set)
///   cycle_free                                   -> integer list of lengths
///   contains_cycle                               -> integer list of lengths
///   wcw_equals, wwd_equals                       -> SpanRows
///   wwd_equals_wcw, in_family_f                  -> bool
struct Expectation {
  std::string key;
  Provenance provenance;
  std::variant<bool, std::int64_t, std::vector<int>, SpanRows> value;
};

struct Fixture {
  std::string name;
  Graph graph;
  std::vector<Expectation> expected;
};

std::vector<Fixture> builtin_fixtures();
/// Throws DomainError for an unknown name.
Fixture find_fixture(const std::string& name);

/// Fixture graphs with vertex labels matching their usual drawings.
Graph c5x3_triangle_graph();
Graph two_c6_graph();
Graph triangle_with_pendants_graph();
Graph bull_graph();

struct ExpectationOutcome {
  std::string key;
  Provenance provenance;
  bool passed;
  std::string detail;  // "expected ..., got ..." on failure
};

struct FixtureResult {
  std::string name;
  bool passed = true;
  bool report_consistent = true;
  std::vector<ExpectationOutcome> outcomes;
};

FixtureResult run_fixture(const Fixture& fixture, const AnalysisOptions& options = {});
Json to_json(const FixtureResult& result);

}  // namespace welldom
