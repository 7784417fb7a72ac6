#include "welldom/analysis.hpp"

#include <array>

#include "welldom/errors.hpp"
#include "welldom/graph_algorithms.hpp"

namespace welldom {
namespace {

constexpr std::array<int, 2> kC4C5 = {4, 5};
constexpr std::array<int, 3> kC4C5C6 = {4, 5, 6};

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json basis_section(const std::optional<SubspaceBasis>& basis) {
  Json j = Json::object();
  if (!basis) {
    j["dimension"] = nullptr;
    j["basis"] = nullptr;
    return j;
  }
  j["dimension"] = basis->dimension();
  j["basis"] = to_json(*basis);
  return j;
}

Json certificate_json(const std::optional<FamilyFCertificate>& cert) {
  if (!cert) return nullptr;
  Json j = Json::object();
  j["centers"] = cert->centers;
  Json cells = Json::array();
  for (VertexSet c : cert->cells) cells.push_back(to_json(c));
  j["cells"] = cells;
  return j;
}

Json dims_json(const DimensionReport& d) {
  Json j = Json::object();
  j["special_form"] = to_string(d.special_form);
  j["flagged"] = d.flagged;
  j["wcw_dim"] = d.wcw_dim;
  j["wwd_dim"] = d.wwd_dim;
  j["l_size"] = d.l_size;
  j["lstar_size"] = d.lstar_size;
  j["alpha_l"] = d.alpha_l;
  j["alpha_lstar"] = d.alpha_lstar;
  j["wwd_dim_equals_lstar_size"] = d.wwd_dim_equals_lstar_size;
  j["wwd_dim_equals_alpha_lstar"] = d.wwd_dim_equals_alpha_lstar;
  j["wcw_dim_equals_alpha_l"] = d.wcw_dim_equals_alpha_l;
  j["wwd_dim_at_most_wcw_dim"] = d.wwd_dim_at_most_wcw_dim;
  j["diagnostics"] = d.diagnostics;
  return j;
}

Json outcome_json(const std::optional<CharacterizationOutcome>& o) {
  if (!o) return nullptr;
  Json j = Json::object();
  j["special_form"] = to_string(o->special_form);
  j["dimension"] = o->basis ? Json(o->basis->dimension()) : Json(nullptr);
  j["notes"] = o->notes;
  return j;
}

Json component_json(const ComponentCharacterization& c) {
  Json j = Json::object();
  j["vertices"] = to_json(c.vertices);
  j["c4c5_violation"] = optional_string(c.c4c5_violation);
  j["c4c5c6_violation"] = optional_string(c.c4c5c6_violation);
  if (c.well_covered) {
    Json wc = Json::object();
    wc["well_covered"] = c.well_covered->well_covered;
    wc["clause"] = to_string(c.well_covered->clause);
    wc["family_f"] = certificate_json(c.well_covered->certificate);
    j["well_covered"] = wc;
  } else {
    j["well_covered"] = nullptr;
  }
  j["wcw"] = outcome_json(c.wcw);
  j["wwd"] = outcome_json(c.wwd);
  j["dimension_checks"] = c.dims ? dims_json(*c.dims) : Json(nullptr);
  return j;
}

}  // namespace

OracleResult run_oracle(const Graph& g, const EnumerationBudget& budget) {
  OracleResult r{enumerate_maximal_independent_sets(g, budget),
                 enumerate_minimal_dominating_sets(g, budget), {}, SubspaceBasis(), SubspaceBasis()};
  r.numbers = domination_numbers(r.independent, r.dominating);
  r.wcw = weight_space_from_family(r.independent, g.order());
  r.wwd = weight_space_from_family(r.dominating, g.order());
  return r;
}

bool AnalysisReport::consistent() const {
  for (const auto& check : {wcw_matches_oracle, wwd_matches_oracle, well_covered_matches_oracle,
                            well_dominated_matches_oracle, wwd_within_wcw}) {
    if (check.has_value() && !*check) return false;
  }
  return true;
}

std::optional<bool> AnalysisReport::well_covered() const {
  if (char_well_covered) return char_well_covered;
  if (oracle) return oracle->well_covered();
  return std::nullopt;
}

std::optional<bool> AnalysisReport::well_dominated() const {
  if (char_well_dominated) return char_well_dominated;
  if (oracle) return oracle->well_dominated();
  return std::nullopt;
}

std::optional<SubspaceBasis> AnalysisReport::wcw() const {
  if (char_wcw) return char_wcw;
  if (oracle) return oracle->wcw;
  return std::nullopt;
}

std::optional<SubspaceBasis> AnalysisReport::wwd() const {
  if (char_wwd) return char_wwd;
  if (oracle) return oracle->wwd;
  return std::nullopt;
}

AnalysisReport analyze(const Graph& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.graph = g;
  r.components = components(g);
  r.connected = r.components.size() <= 1;
  for (int k = 3; k <= 7; ++k) r.cycles[k] = contains_cycle_of_length(g, k);
  r.simplicial = simplicial_vertices(g);
  r.family_f = family_f_certificate(g);
  try {
    r.structure = structure_report(g, options.budget);
  } catch (const ResourceError& e) {
    r.structure_error = e.what();
  }

  bool all_c4c5 = !r.components.empty();
  bool all_c4c5c6 = !r.components.empty();
  bool wc_all = true;
  std::vector<SubspaceBasis> wcw_parts;
  std::vector<SubspaceBasis> wwd_parts;
  std::vector<std::vector<int>> blocks;
  for (VertexSet comp : r.components) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentCharacterization c;
    c.vertices = comp;
    c.c4c5_violation = family_violation(sub.graph, kC4C5);
    c.c4c5c6_violation = family_violation(sub.graph, kC4C5C6);
    if (!c.c4c5_violation) {
      c.well_covered = is_well_covered_c4c5(sub.graph);
      wc_all = wc_all && c.well_covered->well_covered;
    } else {
      all_c4c5 = false;
    }
    if (!c.c4c5c6_violation) {
      try {
        c.wcw = wcw_basis_c4c5c6(sub.graph, options.budget);
        c.wwd = wwd_basis_c4c5c6(sub.graph, options.budget);
        c.dims = dim_checks(sub.graph, options.budget);
        wcw_parts.push_back(*c.wcw->basis);
        wwd_parts.push_back(*c.wwd->basis);
        blocks.push_back(sub.to_old);
      } catch (const ResourceError& e) {
        r.diagnostics.push_back(std::string("characterization skipped: ") + e.what());
        all_c4c5c6 = false;
      }
    } else {
      all_c4c5c6 = false;
    }
    r.parts.push_back(std::move(c));
  }
  if (all_c4c5) {
    r.char_well_covered = wc_all;
    r.char_well_dominated = wc_all;
  }
  auto n = static_cast<std::size_t>(g.order());
  if (all_c4c5c6) {
    r.char_wcw = direct_sum(n, wcw_parts, blocks);
    r.char_wwd = direct_sum(n, wwd_parts, blocks);
  }

  if (options.run_oracle) {
    try {
      r.oracle = run_oracle(g, options.budget);
    } catch (const ResourceError& e) {
      r.oracle_skipped = e.what();
    }
  } else {
    r.oracle_skipped = "oracle disabled";
  }

  if (r.oracle) {
    if (r.char_wcw) r.wcw_matches_oracle = *r.char_wcw == r.oracle->wcw;
    if (r.char_wwd) r.wwd_matches_oracle = *r.char_wwd == r.oracle->wwd;
    if (r.char_well_covered) r.well_covered_matches_oracle = *r.char_well_covered == r.oracle->well_covered();
    if (r.char_well_dominated) {
      r.well_dominated_matches_oracle = *r.char_well_dominated == r.oracle->well_dominated();
    }
  }
  if (auto wcw = r.wcw(), wwd = r.wwd(); wcw && wwd) r.wwd_within_wcw = subspace_contains(*wcw, *wwd);

  if (r.wcw_matches_oracle == false) r.diagnostics.push_back("characterized WCW differs from oracle");
  if (r.wwd_matches_oracle == false) r.diagnostics.push_back("characterized WWD differs from oracle");
  if (r.well_covered_matches_oracle == false) r.diagnostics.push_back("well-covered verdict differs from oracle");
  if (r.well_dominated_matches_oracle == false) {
    r.diagnostics.push_back("well-dominated verdict differs from oracle");
  }
  if (r.wwd_within_wcw == false) r.diagnostics.push_back("WWD is not a subspace of WCW");
  return r;
}

Json to_json(VertexSet s) { return Json(s.members()); }

Json to_json(const SubspaceBasis& basis) {
  Json rows = Json::array();
  for (const auto& row : basis.basis().data()) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    rows.push_back(r);
  }
  return rows;
}

Json oracle_json(const OracleResult& o) {
  Json j = Json::object();
  j["maximal_independent_sets"] = o.independent.sets.size();
  j["minimal_dominating_sets"] = o.dominating.sets.size();
  j["gamma"] = o.numbers.gamma;
  j["upper_gamma"] = o.numbers.upper_gamma;
  j["i"] = o.numbers.independent;
  j["alpha"] = o.numbers.alpha;
  j["well_covered"] = o.well_covered();
  j["well_dominated"] = o.well_dominated();
  // smallest and largest minimal dominating sets, first in canonical order
  auto witness = [&](int size) {
    for (VertexSet s : o.dominating.sets) {
      if (s.size() == size) return to_json(s);
    }
    return Json(nullptr);
  };
  j["minimum_dominating_witness"] = witness(o.numbers.gamma);
  j["largest_minimal_dominating_witness"] = witness(o.numbers.upper_gamma);
  j["wcw"] = basis_section(o.wcw);
  j["wwd"] = basis_section(o.wwd);
  return j;
}

Json weight_space_json(const AnalysisReport& r, bool dominated) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["space"] = dominated ? "WWD" : "WCW";
  const auto& chosen = dominated ? r.char_wwd : r.char_wcw;
  Json c = basis_section(chosen);
  c["applicable"] = chosen.has_value();
  Json reasons = Json::array();
  for (const auto& p : r.parts) {
    if (p.c4c5c6_violation) reasons.push_back(*p.c4c5c6_violation);
  }
  c["reasons"] = reasons;
  j["characterization"] = c;
  if (r.oracle) {
    j["oracle"] = basis_section(dominated ? r.oracle->wwd : r.oracle->wcw);
  } else {
    j["oracle"] = nullptr;
  }
  j["oracle_skipped"] = optional_string(r.oracle_skipped);
  j["matches_oracle"] = optional_bool(dominated ? r.wwd_matches_oracle : r.wcw_matches_oracle);
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;

  Json graph = Json::object();
  graph["order"] = r.graph.order();
  graph["size"] = r.graph.size();
  Json edges = Json::array();
  for (auto [u, v] : r.graph.edges()) edges.push_back({u, v});
  graph["edges"] = edges;
  graph["labels"] = r.graph.labels();
  j["graph"] = graph;

  Json summary = Json::object();
  summary["well_covered"] = optional_bool(r.well_covered());
  summary["well_dominated"] = optional_bool(r.well_dominated());
  auto wcw = r.wcw();
  auto wwd = r.wwd();
  summary["wcw_dim"] = wcw ? Json(wcw->dimension()) : Json(nullptr);
  summary["wwd_dim"] = wwd ? Json(wwd->dimension()) : Json(nullptr);
  summary["consistent"] = r.consistent();
  j["summary"] = summary;

  j["connected"] = r.connected;
  Json comps = Json::array();
  for (VertexSet c : r.components) comps.push_back(to_json(c));
  j["components"] = comps;
  Json cycles = Json::object();
  for (auto [k, present] : r.cycles) cycles[std::to_string(k)] = present;
  j["contains_cycle"] = cycles;

  Json s = Json::object();
  s["simplicial"] = to_json(r.simplicial);
  s["family_f"] = certificate_json(r.family_f);
  if (r.structure) {
    s["L"] = to_json(r.structure->l);
    s["L_star"] = to_json(r.structure->lstar);
    Json d = Json::object();
    for (const auto& [v, set] : r.structure->d) d[std::to_string(v)] = to_json(set);
    s["D"] = d;
    Json partners = Json::object();
    for (const auto& [v, p] : r.structure->triangle_partner) partners[std::to_string(v)] = {p.first, p.second};
    s["triangle_partners"] = partners;
  } else {
    s["L"] = s["L_star"] = s["D"] = s["triangle_partners"] = nullptr;
  }
  s["error"] = optional_string(r.structure_error);
  j["structure"] = s;

  Json ch = Json::object();
  ch["well_covered"] = optional_bool(r.char_well_covered);
  ch["well_dominated"] = optional_bool(r.char_well_dominated);
  ch["wcw"] = basis_section(r.char_wcw);
  ch["wwd"] = basis_section(r.char_wwd);
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(component_json(p));
  ch["components"] = parts;
  j["characterization"] = ch;

  j["oracle"] = r.oracle ? oracle_json(*r.oracle) : Json(nullptr);
  j["oracle_skipped"] = optional_string(r.oracle_skipped);

  Json cc = Json::object();
  cc["wcw_matches_oracle"] = optional_bool(r.wcw_matches_oracle);
  cc["wwd_matches_oracle"] = optional_bool(r.wwd_matches_oracle);
  cc["well_covered_matches_oracle"] = optional_bool(r.well_covered_matches_oracle);
  cc["well_dominated_matches_oracle"] = optional_bool(r.well_dominated_matches_oracle);
  cc["wwd_within_wcw"] = optional_bool(r.wwd_within_wcw);
  j["cross_checks"] = cc;
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace welldom
