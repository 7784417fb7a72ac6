#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "welldom/analysis.hpp"
#include "welldom/errors.hpp"
#include "welldom/fixtures.hpp"
#include "welldom/generator.hpp"
#include "welldom/graph_algorithms.hpp"
#include "welldom/graph_io.hpp"
#include "welldom/weightspace.hpp"

using namespace welldom;

namespace {

// Weight space of a family built directly from subset enumeration: the
// nullspace of all pairwise differences of characteristic vectors.
SubspaceBasis brute_space(const std::vector<VertexSet>& family, int n) {
  RationalMatrix m(n);
  for (std::size_t i = 1; i < family.size(); ++i) {
    RationalVector row(n, 0);
    for (int v = 0; v < n; ++v) row[v] = int(family[i].contains(v)) - int(family[0].contains(v));
    m.add_row(row);
  }
  return nullspace(m);
}

SubspaceBasis rows(int n, std::vector<std::vector<long>> spanning) {
  RationalMatrix m(n);
  for (auto& r : spanning) {
    RationalVector row;
    for (long x : r) row.emplace_back(x);
    m.add_row(row);
  }
  return SubspaceBasis::span_of(m);
}

}  // namespace

TEST_CASE("special forms") {
  CHECK(special_form(cycle_graph(7)) == SpecialForm::C7);
  CHECK(special_form(t10_graph()) == SpecialForm::T10);
  std::mt19937_64 rng(1);
  CHECK(special_form(permute(t10_graph(), brute::random_permutation(rng, 10))) == SpecialForm::T10);
  CHECK(special_form(complete_graph(3)) == SpecialForm::CompleteSmall);
  CHECK(special_form(Graph(1)) == SpecialForm::CompleteSmall);
  CHECK(special_form(path_graph(4)) == SpecialForm::General);
  CHECK(special_form(cycle_graph(6)) == SpecialForm::General);
}

TEST_CASE("T10 shape") {
  Graph t = t10_graph();
  CHECK(t.order() == 10);
  CHECK(t.size() == 12);
  CHECK(is_connected(t));
  CHECK(t.label(0) == "L1");
  CHECK(t.label(9) == "M4");
}

TEST_CASE("family membership") {
  std::vector<int> f45{4, 5};
  CHECK_FALSE(family_violation(cycle_graph(7), f45).has_value());
  CHECK(family_violation(complete_bipartite_graph(3, 3), f45).has_value());
  CHECK(family_violation(Graph(4, {{0, 1}, {2, 3}}), f45).has_value());
  CHECK_THROWS_AS(is_well_covered_c4c5(complete_bipartite_graph(3, 3)), DomainError);
  CHECK_THROWS_AS(wcw_basis_c4c5c6(two_c6_graph()), DomainError);
}

TEST_CASE("well-covered characterization examples") {
  auto c7 = is_well_covered_c4c5(cycle_graph(7));
  CHECK(c7.well_covered);
  CHECK(c7.clause == WellCoveredClause::C7);
  CHECK(is_well_covered_c4c5(t10_graph()).clause == WellCoveredClause::T10);
  auto p4 = is_well_covered_c4c5(path_graph(4));
  CHECK(p4.well_covered);
  CHECK(p4.clause == WellCoveredClause::FamilyF);
  CHECK_FALSE(is_well_covered_c4c5(path_graph(3)).well_covered);
  CHECK_FALSE(is_well_dominated_c4c5(star_graph(3)));
  CHECK(is_well_dominated_c4c5(complete_graph(2)));
}

TEST_CASE("weight space characterization examples") {
  CHECK(*wcw_basis_c4c5c6(cycle_graph(7)).basis == SubspaceBasis::constants(7));
  CHECK(*wwd_basis_c4c5c6(t10_graph()).basis == SubspaceBasis::constants(10));
  CHECK(wcw_basis_c4c5c6(star_graph(3)).basis->dimension() == 3);
  CHECK(*wcw_basis_c4c5c6(Graph(1)).basis == SubspaceBasis::full(1));
  CHECK(*wwd_basis_c4c5c6(complete_graph(3)).basis == SubspaceBasis::constants(3));
  CHECK(*wwd_basis_c4c5c6(path_graph(4)).basis == rows(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(*wwd_basis_c4c5c6(bull_graph()).basis == rows(5, {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 1}}));
}

TEST_CASE("dimension report") {
  DimensionReport p4 = dim_checks(path_graph(4));
  CHECK(p4.wwd_dim == 2);
  CHECK(p4.lstar_size == 2);
  CHECK(p4.wwd_dim_equals_lstar_size);

  DimensionReport tp = dim_checks(triangle_with_pendants_graph());
  CHECK(tp.wcw_dim == 3);
  CHECK(tp.wwd_dim == 3);
  CHECK(tp.lstar_size == 3);
  CHECK_FALSE(tp.flagged);

  // two adjacent pendant vertices of one triangle count once
  DimensionReport k3 = dim_checks(complete_graph(3));
  CHECK(k3.flagged);
  DimensionReport bull = dim_checks(bull_graph());
  CHECK(bull.wwd_dim == 2);
  CHECK(bull.wwd_dim_equals_alpha_lstar);

  CHECK(dim_checks(cycle_graph(7)).flagged);
  CHECK(dim_checks(t10_graph()).flagged);
}

TEST_CASE("analysis of the named graphs") {
  AnalysisReport k33 = analyze(complete_bipartite_graph(3, 3));
  CHECK(k33.well_covered() == true);
  CHECK(k33.well_dominated() == false);
  CHECK_FALSE(k33.char_wcw.has_value());
  CHECK(k33.consistent());

  AnalysisReport two = analyze(two_c6_graph());
  REQUIRE(two.oracle.has_value());
  CHECK(two.oracle->wwd.dimension() == 2);
  CHECK_FALSE(two.char_wwd.has_value());

  AnalysisReport t10 = analyze(t10_graph());
  CHECK(t10.oracle->numbers.gamma == 4);
  CHECK(t10.wcw_matches_oracle == true);
  CHECK(t10.wwd_matches_oracle == true);
  CHECK(t10.consistent());
}

TEST_CASE("disconnected graphs are direct sums") {
  // P4 on {0,2,4,6}, K3 on {1,3,5}
  Graph g(7, {{0, 2}, {2, 4}, {4, 6}, {1, 3}, {3, 5}, {1, 5}});
  AnalysisReport r = analyze(g);
  CHECK_FALSE(r.connected);
  REQUIRE(r.char_wcw.has_value());
  REQUIRE(r.char_wwd.has_value());
  CHECK(r.char_wwd->dimension() == 3);
  CHECK(r.wcw_matches_oracle == true);
  CHECK(r.wwd_matches_oracle == true);
  CHECK(r.consistent());
}

TEST_CASE("report JSON") {
  Json j = to_json(analyze(cycle_graph(7)));
  CHECK(j.begin().key() == "schema_version");
  CHECK(j["schema_version"] == 1);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema_version", "graph", "summary", "connected", "components",
                                         "contains_cycle", "structure", "characterization", "oracle",
                                         "oracle_skipped", "cross_checks", "diagnostics"});
  CHECK(j["summary"]["wcw_dim"] == 1);
  // same input, same bytes; vertex relabeling of C7 changes nothing either
  std::mt19937_64 rng(2);
  CHECK(to_json(analyze(cycle_graph(7))).dump() == j.dump());
  Graph shuffled = permute(cycle_graph(7), brute::random_permutation(rng, 7));
  CHECK(to_json(analyze(shuffled))["summary"] == j["summary"]);
  CHECK(to_json(SubspaceBasis::constants(2)) == Json::parse(R"([["1/1","1/1"]])"));
}

TEST_CASE("frozen fixture values agree with subset enumeration") {
  for (const Fixture& f : builtin_fixtures()) {
    CAPTURE(f.name);
    const Graph& g = f.graph;
    auto mis = brute::maximal_independent_sets(g);
    auto mds = brute::minimal_dominating_sets(g);
    auto size_of = [](const std::vector<VertexSet>& fam, bool largest) {
      int best = largest ? 0 : 1 << 20;
      for (VertexSet s : fam) best = largest ? std::max(best, s.size()) : std::min(best, s.size());
      return best;
    };
    for (const Expectation& e : f.expected) {
      CAPTURE(e.key);
      const std::string& k = e.key;
      if (k == "mis_count") CHECK(std::int64_t(mis.size()) == std::get<std::int64_t>(e.value));
      if (k == "gamma") CHECK(size_of(mds, false) == std::get<std::int64_t>(e.value));
      if (k == "upper_gamma") CHECK(size_of(mds, true) == std::get<std::int64_t>(e.value));
      if (k == "i") CHECK(size_of(mis, false) == std::get<std::int64_t>(e.value));
      if (k == "alpha") CHECK(size_of(mis, true) == std::get<std::int64_t>(e.value));
      if (k == "well_covered") CHECK((size_of(mis, false) == size_of(mis, true)) == std::get<bool>(e.value));
      if (k == "well_dominated") CHECK((size_of(mds, false) == size_of(mds, true)) == std::get<bool>(e.value));
      if (k == "mis_sizes") {
        std::vector<int> sizes;
        for (VertexSet s : mis) sizes.push_back(s.size());
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        CHECK(sizes == std::get<std::vector<int>>(e.value));
      }
      if (k == "mds_contains") {
        VertexSet s;
        for (int v : std::get<std::vector<int>>(e.value)) s.insert(v);
        CHECK(std::find(mds.begin(), mds.end(), s) != mds.end());
      }
      if (k == "in_family_f") CHECK(brute::in_family_f(g) == std::get<bool>(e.value));
      if (k == "cycle_free") {
        for (int len : std::get<std::vector<int>>(e.value)) CHECK_FALSE(brute::has_cycle(g, len));
      }
      if (k == "contains_cycle") {
        for (int len : std::get<std::vector<int>>(e.value)) CHECK(brute::has_cycle(g, len));
      }
      if (k == "wcw_dim") CHECK(std::int64_t(brute_space(mis, g.order()).dimension()) == std::get<std::int64_t>(e.value));
      if (k == "wwd_dim") CHECK(std::int64_t(brute_space(mds, g.order()).dimension()) == std::get<std::int64_t>(e.value));
      if (k == "wcw_equals" || k == "wwd_equals") {
        RationalMatrix m(g.order());
        for (auto& r : std::get<SpanRows>(e.value)) {
          RationalVector row;
          for (auto x : r) row.emplace_back(long(x));
          m.add_row(row);
        }
        CHECK(SubspaceBasis::span_of(m) == brute_space(k == "wcw_equals" ? mis : mds, g.order()));
      }
      if (k == "wwd_equals_wcw") CHECK((brute_space(mis, g.order()) == brute_space(mds, g.order())) == std::get<bool>(e.value));
    }
  }
}

TEST_CASE("every builtin fixture passes") {
  for (const Fixture& f : builtin_fixtures()) {
    FixtureResult r = run_fixture(f);
    for (const auto& o : r.outcomes) CHECK_MESSAGE(o.passed, f.name, " ", o.key, ": ", o.detail);
    CHECK(r.report_consistent);
  }
  CHECK_THROWS_AS(find_fixture("nope"), DomainError);
}

TEST_CASE("generator") {
  GeneratorConfig cfg{.max_n = 12, .min_n = 2, .forbidden_cycles = {4, 5, 6}, .seed = 99, .count = 120,
                      .connected = true};
  auto a = generate_family(cfg);
  auto b = generate_family(cfg);
  CHECK(a == b);
  REQUIRE(a.size() == 120);
  for (const Graph& g : a) {
    CHECK(is_connected(g));
    CHECK(g.order() >= 2);
    CHECK(g.order() <= 12);
    for (int k : {4, 5, 6}) CHECK_FALSE(brute::has_cycle(g, k));
  }
  cfg.seed = 100;
  CHECK(generate_family(cfg) != a);
  GeneratorConfig too_big;
  too_big.max_n = 70;
  CHECK_THROWS_AS(FamilyGenerator{too_big}, DomainError);
  GeneratorConfig empty_range;
  empty_range.max_n = 3;
  empty_range.min_n = 5;
  CHECK_THROWS_AS(FamilyGenerator{empty_range}, DomainError);
}

TEST_CASE("paw: adjacent triangle vertices of L* share one dimension") {
  // triangle 0,1,2 with pendant 3 on 2; minimal dominating sets {2}, {0,3}, {1,3}
  Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(lstar_set(paw) == VertexSet{0, 1, 3});
  CHECK(brute::minimal_dominating_sets(paw) == std::vector<VertexSet>{{2}, {0, 3}, {1, 3}});
  SubspaceBasis wwd = brute_space(brute::minimal_dominating_sets(paw), 4);
  CHECK(wwd == rows(4, {{1, 1, 1, 0}, {0, 0, 1, 1}}));
  DimensionReport r = dim_checks(paw);
  CHECK(r.wwd_dim == 2);
  CHECK(r.lstar_size == 3);
  CHECK(r.alpha_lstar == 2);
  CHECK_FALSE(r.wwd_dim_equals_lstar_size);
  CHECK(r.wwd_dim_equals_alpha_lstar);
}
