#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "welldom/budget.hpp"
#include "welldom/graph.hpp"
#include "welldom/oracle.hpp"
#include "welldom/structure.hpp"
#include "welldom/weightspace.hpp"

namespace welldom {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct AnalysisOptions {
  EnumerationBudget budget;
  bool run_oracle = true;
};

/// Characterization of one connected component.
struct ComponentCharacterization {
  VertexSet vertices;
  std::optional<std::string> c4c5_violation;
  std::optional<std::string> c4c5c6_violation;
  std::optional<WellCoveredVerdict> well_covered;
  std::optional<CharacterizationOutcome> wcw;
  std::optional<CharacterizationOutcome> wwd;
  std::optional<DimensionReport> dims;
};

struct OracleResult {
  SetFamily independent;
  SetFamily dominating;
  DominationNumbers numbers;
  SubspaceBasis wcw;
  SubspaceBasis wwd;
  bool well_covered() const { return numbers.independent == numbers.alpha; }
  bool well_dominated() const { return numbers.gamma == numbers.upper_gamma; }
};

OracleResult run_oracle(const Graph& g, const EnumerationBudget& budget = {});

struct AnalysisReport {
  Graph graph;
  bool connected = false;
  std::vector<VertexSet> components;
  std::map<int, bool> cycles;  // k in 3..7 -> contains C_k
  VertexSet simplicial;
  std::optional<FamilyFCertificate> family_f;
  std::optional<StructureReport> structure;
  std::optional<std::string> structure_error;

  std::vector<ComponentCharacterization> parts;
  // Whole-graph characterization results, present only when every component
  // lies in the relevant family. Weight spaces are direct sums.
  std::optional<bool> char_well_covered;
  std::optional<bool> char_well_dominated;
  std::optional<SubspaceBasis> char_wcw;
  std::optional<SubspaceBasis> char_wwd;

  std::optional<OracleResult> oracle;
  std::optional<std::string> oracle_skipped;

  // Cross-checks; absent when one side is unavailable.
  std::optional<bool> wcw_matches_oracle;
  std::optional<bool> wwd_matches_oracle;
  std::optional<bool> well_covered_matches_oracle;
  std::optional<bool> well_dominated_matches_oracle;
  std::optional<bool> wwd_within_wcw;
  std::vector<std::string> diagnostics;

  /// False when any available cross-check disagrees.
  bool consistent() const;
  std::optional<bool> well_covered() const;
  std::optional<bool> well_dominated() const;
  std::optional<SubspaceBasis> wcw() const;
  std::optional<SubspaceBasis> wwd() const;
};

/// Full analysis. Characterizations are skipped with a reason outside their
/// families; the oracle is skipped when over budget. Only ResourceErrors from
/// structure computations are recorded rather than thrown.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& options = {});

Json to_json(VertexSet s);
Json to_json(const SubspaceBasis& basis);
Json to_json(const AnalysisReport& report);
/// Pieces used by the weight-space subcommands.
Json weight_space_json(const AnalysisReport& report, bool dominated);
Json oracle_json(const OracleResult& oracle);

}  // namespace welldom
