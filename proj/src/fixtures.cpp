#include "welldom/fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "welldom/errors.hpp"
#include "welldom/graph_algorithms.hpp"
#include "welldom/weightspace.hpp"

namespace welldom {
namespace {

constexpr auto P = Provenance::Paper;
constexpr auto T = Provenance::Trivial;
constexpr auto D = Provenance::Derived;

Expectation expect(std::string key, Provenance p, bool v) { return {std::move(key), p, v}; }
Expectation expect(std::string key, Provenance p, int v) { return {std::move(key), p, std::int64_t{v}}; }
Expectation expect(std::string key, Provenance p, std::vector<int> v) {
  return {std::move(key), p, std::move(v)};
}
Expectation expect(std::string key, Provenance p, SpanRows v) { return {std::move(key), p, std::move(v)}; }

Graph labelled(Graph g, std::vector<std::string> labels) {
  g.set_labels(std::move(labels));
  return g;
}

std::string describe(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

SubspaceBasis span_rows(const SpanRows& rows, int order) {
  RationalMatrix m(static_cast<std::size_t>(order));
  for (const auto& r : rows) {
    RationalVector x;
    for (auto e : r) x.emplace_back(static_cast<long>(e));
    m.add_row(std::move(x));
  }
  return SubspaceBasis::span_of(m);
}

VertexSet to_set(const std::vector<int>& v) {
  VertexSet s;
  for (int x : v) s.insert(x);
  return s;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

Graph c5x3_triangle_graph() {
  // x1..x5 = 0..4, y1..y5 = 5..9, z1..z5 = 10..14; triangle x1 y1 z1
  Graph g(15);
  for (int base : {0, 5, 10}) {
    for (int i = 0; i < 5; ++i) g.add_edge(base + i, base + (i + 1) % 5);
  }
  g.add_edge(0, 5);
  g.add_edge(5, 10);
  g.add_edge(0, 10);
  std::vector<std::string> labels;
  for (char c : {'x', 'y', 'z'}) {
    for (int i = 1; i <= 5; ++i) labels.push_back(std::string(1, c) + std::to_string(i));
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph two_c6_graph() {
  // v1..v11 = 0..10; cycles (v1..v6) and (v6..v11) share v6
  Graph g(11);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  for (int i = 5; i < 10; ++i) g.add_edge(i, i + 1);
  g.add_edge(10, 5);
  std::vector<std::string> labels;
  for (int i = 1; i <= 11; ++i) labels.push_back("v" + std::to_string(i));
  g.set_labels(std::move(labels));
  return g;
}

Graph triangle_with_pendants_graph() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph bull_graph() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}}); }

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;

  out.push_back({"c7", labelled(cycle_graph(7), {"v0", "v1", "v2", "v3", "v4", "v5", "v6"}),
                 {expect("cycle_free", T, std::vector<int>{4, 5, 6}),
                  expect("mis_count", D, 7),
                  expect("mis_sizes", D, std::vector<int>{3}),
                  expect("gamma", P, 3), expect("upper_gamma", P, 3),
                  expect("i", T, 3), expect("alpha", T, 3),
                  expect("well_covered", P, true), expect("well_dominated", P, true),
                  expect("L", T, std::vector<int>{}),
                  expect("wcw_equals", P, SpanRows{{1, 1, 1, 1, 1, 1, 1}}),
                  expect("wwd_equals", P, SpanRows{{1, 1, 1, 1, 1, 1, 1}}),
                  expect("in_family_f", P, false)}});

  out.push_back({"t10", t10_graph(),
                 {expect("order", T, 10), expect("size", D, 12),
                  expect("cycle_free", D, std::vector<int>{4, 5, 6}),
                  expect("gamma", P, 4), expect("upper_gamma", P, 4),
                  expect("i", D, 4), expect("alpha", D, 4),
                  expect("well_covered", P, true), expect("well_dominated", P, true),
                  expect("wcw_equals", P, SpanRows{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}),
                  expect("wwd_equals", P, SpanRows{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}})}});

  out.push_back({"k33", complete_bipartite_graph(3, 3),
                 {expect("contains_cycle", T, std::vector<int>{4}),
                  expect("cycle_free", T, std::vector<int>{5}),
                  expect("mis_count", P, 2), expect("mis_sizes", P, std::vector<int>{3}),
                  expect("mds_contains", P, std::vector<int>{0, 3}),
                  expect("gamma", P, 2), expect("i", P, 3), expect("alpha", P, 3),
                  expect("upper_gamma", D, 3),
                  expect("well_covered", P, true), expect("well_dominated", P, false),
                  expect("wcw_dim", D, 5), expect("wwd_dim", D, 0)}});

  out.push_back({"c5x3-triangle", c5x3_triangle_graph(),
                 {expect("order", P, 15), expect("cycle_free", P, std::vector<int>{4}),
                  expect("mis_sizes", P, std::vector<int>{6}),
                  expect("mds_contains", P, std::vector<int>{0, 1, 4, 7, 8, 12, 13}),
                  expect("well_covered", P, true), expect("well_dominated", P, false)}});

  out.push_back({"two-c6", two_c6_graph(),
                 {expect("order", P, 11), expect("cycle_free", P, std::vector<int>{4, 5}),
                  expect("contains_cycle", P, std::vector<int>{6}),
                  expect("L", P, std::vector<int>{}), expect("L_star", P, std::vector<int>{}),
                  expect("wwd_equals", P,
                         SpanRows{{1, 1, 0, -1, -1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1, 1, 0, -1, -1}})}});

  out.push_back({"triangle-pendants", triangle_with_pendants_graph(),
                 {expect("cycle_free", T, std::vector<int>{4, 5, 6}),
                  expect("L", T, std::vector<int>{3, 4, 5}),
                  expect("L_star", T, std::vector<int>{3, 4, 5}),
                  expect("wwd_dim", D, 3), expect("wcw_dim", D, 3),
                  expect("wwd_equals_wcw", P, true)}});

  out.push_back({"bull", bull_graph(),
                 {expect("cycle_free", T, std::vector<int>{4, 5, 6}),
                  expect("L", T, std::vector<int>{0, 3, 4}),
                  expect("L_star", D, std::vector<int>{0, 4}),
                  expect("wcw_dim", D, 3),
                  expect("wwd_equals", D, SpanRows{{1, 1, 0, 0, 0}, {0, 0, 1, 0, 1}}),
                  expect("wwd_equals_wcw", P, false)}});

  out.push_back({"p3", path_graph(3),
                 {expect("simplicial", T, std::vector<int>{0, 2}),
                  expect("L", T, std::vector<int>{0, 2}),
                  expect("mis_sizes", T, std::vector<int>{1, 2}),
                  expect("well_covered", T, false), expect("well_dominated", T, false)}});

  out.push_back({"p4", path_graph(4),
                 {expect("L", T, std::vector<int>{0, 3}),
                  expect("mis_sizes", D, std::vector<int>{2}),
                  expect("in_family_f", D, true),
                  expect("well_covered", D, true), expect("well_dominated", D, true),
                  expect("L_star", T, std::vector<int>{0, 3}),
                  expect("wwd_dim", D, 2)}});

  out.push_back({"star-k13", star_graph(3),
                 {expect("simplicial", T, std::vector<int>{1, 2, 3}),
                  expect("in_family_f", D, false),
                  expect("wcw_equals", D, SpanRows{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}),
                  expect("wcw_dim", D, 3)}});

  out.push_back({"k1", Graph(1),
                 {expect("well_covered", T, true), expect("well_dominated", T, true),
                  expect("wcw_dim", T, 1), expect("wwd_dim", T, 1)}});
  out.push_back({"k2", complete_graph(2),
                 {expect("in_family_f", T, true), expect("well_dominated", T, true),
                  expect("wwd_dim", P, 1)}});
  out.push_back({"k3", complete_graph(3),
                 {expect("L", T, std::vector<int>{0, 1, 2}),
                  expect("gamma", P, 1), expect("upper_gamma", P, 1),
                  expect("wwd_equals", P, SpanRows{{1, 1, 1}})}});
  return out;
}

Fixture find_fixture(const std::string& name) {
  for (auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw DomainError("unknown fixture '" + name + "'");
}

FixtureResult run_fixture(const Fixture& fixture, const AnalysisOptions& options) {
  const Graph& g = fixture.graph;
  AnalysisReport report = analyze(g, options);
  FixtureResult result{fixture.name, true, report.consistent(), {}};

  for (const auto& e : fixture.expected) {
    ExpectationOutcome o{e.key, e.provenance, false, {}};
    auto fail_detail = [&](const std::string& expected, const std::string& got) {
      o.detail = "expected " + expected + ", got " + got;
    };
    auto as_int = [&](std::int64_t got) {
      auto want = std::get<std::int64_t>(e.value);
      o.passed = got == want;
      if (!o.passed) fail_detail(std::to_string(want), std::to_string(got));
    };
    auto as_bool = [&](std::optional<bool> got) {
      bool want = std::get<bool>(e.value);
      o.passed = got.has_value() && *got == want;
      if (!o.passed) fail_detail(want ? "true" : "false", got ? (*got ? "true" : "false") : "unavailable");
    };
    auto as_set = [&](std::vector<int> got) {
      auto want = std::get<std::vector<int>>(e.value);
      o.passed = got == want;
      if (!o.passed) fail_detail(describe(want), describe(got));
    };
    auto as_span = [&](const std::optional<SubspaceBasis>& got) {
      SubspaceBasis want = span_rows(std::get<SpanRows>(e.value), g.order());
      o.passed = got.has_value() && *got == want;
      if (!o.passed) {
        fail_detail("subspace of dimension " + std::to_string(want.dimension()),
                    got ? "a different subspace of dimension " + std::to_string(got->dimension())
                        : "unavailable");
      }
    };
    auto need_oracle = [&]() -> const OracleResult* {
      if (!report.oracle) o.detail = "oracle unavailable: " + report.oracle_skipped.value_or("");
      return report.oracle ? &*report.oracle : nullptr;
    };

    const std::string& k = e.key;
    if (k == "order") {
      as_int(g.order());
    } else if (k == "size") {
      as_int(g.size());
    } else if (k == "gamma" || k == "upper_gamma" || k == "i" || k == "alpha") {
      if (const auto* orc = need_oracle()) {
        const auto& n = orc->numbers;
        as_int(k == "gamma" ? n.gamma : k == "upper_gamma" ? n.upper_gamma : k == "i" ? n.independent : n.alpha);
      }
    } else if (k == "mis_count") {
      if (const auto* orc = need_oracle()) as_int(static_cast<std::int64_t>(orc->independent.sets.size()));
    } else if (k == "mis_sizes") {
      if (const auto* orc = need_oracle()) {
        std::set<int> sizes;
        for (VertexSet s : orc->independent.sets) sizes.insert(s.size());
        as_set({sizes.begin(), sizes.end()});
      }
    } else if (k == "mds_contains" || k == "mis_contains") {
      if (const auto* orc = need_oracle()) {
        VertexSet s = to_set(std::get<std::vector<int>>(e.value));
        const SetFamily& f = k == "mds_contains" ? orc->dominating : orc->independent;
        o.passed = f.contains(s);
        if (!o.passed) o.detail = describe(s.members()) + " not in the enumerated family";
      }
    } else if (k == "well_covered") {
      as_bool(report.well_covered());
    } else if (k == "well_dominated") {
      as_bool(report.well_dominated());
    } else if (k == "connected") {
      as_bool(report.connected);
    } else if (k == "in_family_f") {
      as_bool(report.family_f.has_value());
    } else if (k == "L" || k == "L_star") {
      if (report.structure) {
        as_set((k == "L" ? report.structure->l : report.structure->lstar).members());
      } else {
        o.detail = "structure unavailable";
      }
    } else if (k == "simplicial") {
      as_set(report.simplicial.members());
    } else if (k == "cycle_free" || k == "contains_cycle") {
      bool want = k == "contains_cycle";
      o.passed = true;
      for (int len : std::get<std::vector<int>>(e.value)) {
        if (contains_cycle_of_length(g, len) != want) {
          o.passed = false;
          o.detail = "cycle of length " + std::to_string(len) + (want ? " absent" : " present");
        }
      }
    } else if (k == "wcw_dim" || k == "wwd_dim") {
      auto basis = k == "wcw_dim" ? report.wcw() : report.wwd();
      if (basis) {
        as_int(static_cast<std::int64_t>(basis->dimension()));
      } else {
        o.detail = "weight space unavailable";
      }
    } else if (k == "wcw_equals") {
      as_span(report.wcw());
    } else if (k == "wwd_equals") {
      as_span(report.wwd());
    } else if (k == "wwd_equals_wcw") {
      auto a = report.wcw();
      auto b = report.wwd();
      as_bool(a && b ? std::optional<bool>(*a == *b) : std::nullopt);
    } else {
      o.detail = "unknown expectation key";
    }
    result.passed = result.passed && o.passed;
    result.outcomes.push_back(std::move(o));
  }
  result.passed = result.passed && result.report_consistent;
  return result;
}

Json to_json(const FixtureResult& r) {
  Json j = Json::object();
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["report_consistent"] = r.report_consistent;
  Json checks = Json::array();
  for (const auto& o : r.outcomes) {
    Json c = Json::object();
    c["key"] = o.key;
    c["provenance"] = to_string(o.provenance);
    c["passed"] = o.passed;
    if (!o.passed) c["detail"] = o.detail;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace welldom
