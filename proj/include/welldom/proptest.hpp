#pragma once

#include <map>
#include <string>
#include <vector>

#include "welldom/analysis.hpp"
#include "welldom/budget.hpp"
#include "welldom/generator.hpp"

namespace welldom {

struct PropertyTally {
  int run = 0;
  int failures = 0;
  /// Informational checks are reported but never fail the run.
  bool informational = false;
};

struct PropertySummary {
  int graphs = 0;
  int connected = 0;
  std::map<std::string, PropertyTally> checks;
  std::vector<std::string> failure_examples;  // first few, as graph6 + check name

  bool passed() const;
};

/// Oracle-backed property run over a generated family:
///   domination_chain, weighted_chain, well_dominated_implies_well_covered,
///   independent_within_dominating, wwd_within_wcw, wwd_closure
/// on every graph, plus on connected members of the relevant families:
///   c4c5_well_dominated_equivalence (no C4, C5),
///   wcw_matches_oracle, wwd_matches_oracle, wwd_dim_equals_alpha_lstar
///   (no C4, C5, C6), and the informational wwd_dim_equals_lstar_size.
PropertySummary run_properties(const GeneratorConfig& generator, const EnumerationBudget& budget = {});

Json to_json(const PropertySummary& summary);

}  // namespace welldom
