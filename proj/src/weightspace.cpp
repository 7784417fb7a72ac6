#include "welldom/weightspace.hpp"

#include <array>

#include "welldom/errors.hpp"
#include "welldom/graph_algorithms.hpp"
#include "welldom/independent_sets.hpp"

namespace welldom {
namespace {

constexpr std::array<int, 2> kC4C5 = {4, 5};
constexpr std::array<int, 3> kC4C5C6 = {4, 5, 6};

void require_family(const Graph& g, std::span<const int> forbidden) {
  if (auto reason = family_violation(g, forbidden)) throw DomainError(*reason);
}

RationalVector unit(std::size_t n, int v) {
  RationalVector row(n, 0);
  row[v] = 1;
  return row;
}

RationalVector sum_pattern(std::size_t n, int v, VertexSet m) {
  RationalVector row = unit(n, v);
  for (int u : m) row[u] -= 1;
  return row;
}

// Rows of the WCW system; optionally the L \ L* zero rows for WWD.
RowSpace assemble_constraints(const Graph& g, bool dominated, const EnumerationBudget& budget,
                              std::vector<std::string>& notes) {
  auto n = static_cast<std::size_t>(g.order());
  RowSpace rows(n);
  VertexSet l = l_set(g);
  for (VertexSet comp : components(g, l)) {
    int root = comp.min();
    for (int u : comp - VertexSet::singleton(root)) {
      RationalVector row = unit(n, root);
      row[u] -= 1;
      rows.add(std::move(row));
    }
  }
  std::vector<std::pair<int, VertexSet>> d_tables;
  for (int v : g.vertices() - l) {
    VertexSet d = d_set(g, v);
    d_tables.emplace_back(v, d);
    rows.add(sum_pattern(n, v, greedy_maximal_independent_set(g, d)));
  }
  if (dominated) {
    VertexSet outside = l - lstar_set(g, budget);
    for (int v : outside) rows.add(unit(n, v));
    if (!outside.empty()) {
      notes.push_back("w vanishes on L \\ L* (" + std::to_string(outside.size()) + " vertices)");
    }
  }
  for (const auto& [v, d] : d_tables) {
    for_each_maximal_independent_set(g, d, [&, v = v](VertexSet m) {
      if (!rows.contains(sum_pattern(n, v, m))) {
        throw ConsistencyError("vertex " + std::to_string(v) +
                               ": maximal independent sets of D(v) give inequivalent constraints");
      }
      return true;
    });
  }
  return rows;
}

CharacterizationOutcome characterize(const Graph& g, bool dominated, const EnumerationBudget& budget) {
  require_family(g, kC4C5C6);
  CharacterizationOutcome out;
  out.applicable = true;
  out.special_form = special_form(g);
  if (out.special_form != SpecialForm::General) {
    out.basis = SubspaceBasis::constants(g.order());
    out.notes.push_back(std::string("special form ") + to_string(out.special_form) +
                        ": constant weights only");
    return out;
  }
  RowSpace rows = assemble_constraints(g, dominated, budget, out.notes);
  out.basis = nullspace(rows.matrix());
  return out;
}

}  // namespace

Graph t10_graph() {
  enum { L1, L2, L3, R1, R2, R3, M1, M2, M3, M4 };
  Graph g(10, {{L1, L2}, {L2, L3}, {L1, R1}, {L1, M1}, {M1, R1}, {R1, R2},
               {R2, R3}, {M1, M2}, {M2, M3}, {M3, M4}, {L3, M4}, {M4, R3}});
  g.set_labels({"L1", "L2", "L3", "R1", "R2", "R3", "M1", "M2", "M3", "M4"});
  return g;
}

const char* to_string(SpecialForm form) {
  switch (form) {
    case SpecialForm::C7: return "C7";
    case SpecialForm::T10: return "T10";
    case SpecialForm::CompleteSmall: return "complete<=3";
    case SpecialForm::General: break;
  }
  return "general";
}

const char* to_string(WellCoveredClause clause) {
  switch (clause) {
    case WellCoveredClause::C7: return "C7";
    case WellCoveredClause::T10: return "T10";
    case WellCoveredClause::FamilyF: return "family-F";
    case WellCoveredClause::None: break;
  }
  return "none";
}

SpecialForm special_form(const Graph& g) {
  int n = g.order();
  if (n >= 1 && n <= 3 && g.size() == n * (n - 1) / 2) return SpecialForm::CompleteSmall;
  if (n == 7 && is_isomorphic_small(g, cycle_graph(7))) return SpecialForm::C7;
  if (n == 10 && is_isomorphic_small(g, t10_graph())) return SpecialForm::T10;
  return SpecialForm::General;
}

std::optional<std::string> family_violation(const Graph& g, std::span<const int> forbidden_lengths) {
  if (g.order() == 0) return "graph is empty";
  if (!is_connected(g)) return "graph is disconnected";
  for (int k : forbidden_lengths) {
    if (contains_cycle_of_length(g, k)) return "graph contains a cycle of length " + std::to_string(k);
  }
  return std::nullopt;
}

WellCoveredVerdict is_well_covered_c4c5(const Graph& g) {
  require_family(g, kC4C5);
  WellCoveredVerdict v;
  SpecialForm form = special_form(g);
  if (form == SpecialForm::C7 || form == SpecialForm::T10) {
    v.well_covered = true;
    v.clause = form == SpecialForm::C7 ? WellCoveredClause::C7 : WellCoveredClause::T10;
    return v;
  }
  v.certificate = family_f_certificate(g);
  if (v.certificate) {
    v.well_covered = true;
    v.clause = WellCoveredClause::FamilyF;
  }
  return v;
}

bool is_well_dominated_c4c5(const Graph& g) { return is_well_covered_c4c5(g).well_covered; }

CharacterizationOutcome wcw_basis_c4c5c6(const Graph& g, const EnumerationBudget& budget) {
  return characterize(g, false, budget);
}

CharacterizationOutcome wwd_basis_c4c5c6(const Graph& g, const EnumerationBudget& budget) {
  return characterize(g, true, budget);
}

DimensionReport dim_checks(const Graph& g, const EnumerationBudget& budget) {
  DimensionReport r;
  CharacterizationOutcome wcw = wcw_basis_c4c5c6(g, budget);
  CharacterizationOutcome wwd = wwd_basis_c4c5c6(g, budget);
  VertexSet l = l_set(g);
  VertexSet lstar = lstar_set(g, budget);
  r.special_form = wcw.special_form;
  r.flagged = r.special_form != SpecialForm::General;
  r.wcw_dim = static_cast<int>(wcw.basis->dimension());
  r.wwd_dim = static_cast<int>(wwd.basis->dimension());
  r.l_size = l.size();
  r.lstar_size = lstar.size();
  r.alpha_l = independence_number(g, l);
  r.alpha_lstar = independence_number(g, lstar);
  r.wwd_dim_equals_lstar_size = r.wwd_dim == r.lstar_size;
  r.wwd_dim_equals_alpha_lstar = r.wwd_dim == r.alpha_lstar;
  r.wcw_dim_equals_alpha_l = r.wcw_dim == r.alpha_l;
  r.wwd_dim_at_most_wcw_dim = r.wwd_dim <= r.wcw_dim;
  if (r.flagged) {
    r.diagnostics.push_back(std::string("special form ") + to_string(r.special_form) +
                            ": dimension formulas in terms of L and L* do not apply");
    return r;
  }
  if (!r.wwd_dim_equals_lstar_size) {
    r.diagnostics.push_back("dim WWD = " + std::to_string(r.wwd_dim) + " differs from |L*| = " +
                            std::to_string(r.lstar_size));
  }
  if (!r.wwd_dim_equals_alpha_lstar) {
    r.diagnostics.push_back("dim WWD = " + std::to_string(r.wwd_dim) + " differs from alpha(G[L*]) = " +
                            std::to_string(r.alpha_lstar));
  }
  if (!r.wcw_dim_equals_alpha_l) {
    r.diagnostics.push_back("dim WCW = " + std::to_string(r.wcw_dim) + " differs from alpha(G[L]) = " +
                            std::to_string(r.alpha_l));
  }
  if (!r.wwd_dim_at_most_wcw_dim) r.diagnostics.push_back("dim WWD exceeds dim WCW");
  return r;
}

}  // namespace welldom
