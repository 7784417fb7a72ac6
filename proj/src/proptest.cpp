#include "welldom/proptest.hpp"

#include <array>
#include <random>

#include "welldom/graph_algorithms.hpp"
#include "welldom/graph_io.hpp"
#include "welldom/independent_sets.hpp"
#include "welldom/weightspace.hpp"

namespace welldom {
namespace {

constexpr std::size_t kMaxExamples = 10;
constexpr std::array<int, 2> kC4C5 = {4, 5};
constexpr std::array<int, 3> kC4C5C6 = {4, 5, 6};

Rational random_rational(std::mt19937_64& rng, bool nonnegative) {
  std::uniform_int_distribution<long> num(nonnegative ? 0 : -20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

struct Recorder {
  PropertySummary& summary;
  const Graph& g;

  void check(const std::string& name, bool ok, bool informational = false) {
    PropertyTally& t = summary.checks[name];
    t.informational = informational;
    ++t.run;
    if (ok) return;
    ++t.failures;
    if (!informational && summary.failure_examples.size() < kMaxExamples) {
      summary.failure_examples.push_back(name + ": " + serialize_graph(g, GraphFormat::Graph6));
    }
  }
};

}  // namespace

bool PropertySummary::passed() const {
  for (const auto& [name, t] : checks) {
    if (!t.informational && t.failures > 0) return false;
  }
  return true;
}

PropertySummary run_properties(const GeneratorConfig& generator, const EnumerationBudget& budget) {
  PropertySummary summary;
  FamilyGenerator gen(generator);
  std::mt19937_64 rng(generator.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int index = 0; index < generator.count; ++index) {
    Graph g = gen.next();
    ++summary.graphs;
    Recorder rec{summary, g};
    auto n = static_cast<std::size_t>(g.order());

    OracleResult orc = run_oracle(g, budget);
    const auto& dn = orc.numbers;
    rec.check("domination_chain", dn.gamma <= dn.independent && dn.independent <= dn.alpha &&
                                      dn.alpha <= dn.upper_gamma);

    RationalVector w(n);
    for (auto& x : w) x = random_rational(rng, true);
    ExtremalWeights ew = extremal_weights(orc.independent, orc.dominating, w);
    rec.check("weighted_chain", ew.min_dominating <= ew.min_independent &&
                                    ew.min_independent <= ew.max_independent &&
                                    ew.max_independent <= ew.max_dominating);

    rec.check("well_dominated_implies_well_covered", !orc.well_dominated() || orc.well_covered());
    bool contained = true;
    for (VertexSet s : orc.independent.sets) contained = contained && orc.dominating.contains(s);
    rec.check("independent_within_dominating", contained);
    rec.check("wwd_within_wcw", subspace_contains(orc.wcw, orc.wwd));

    if (orc.wwd.dimension() >= 1) {
      const auto& rows = orc.wwd.basis().data();
      std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
      const RationalVector& w1 = rows[pick(rng)];
      const RationalVector& w2 = rows[pick(rng)];
      Rational lambda = random_rational(rng, false);
      RationalVector combo(n);
      for (std::size_t v = 0; v < n; ++v) combo[v] = w1[v] + lambda * w2[v];
      Rational first = weight_of(orc.dominating.sets.front(), combo);
      bool equal = true;
      for (VertexSet s : orc.dominating.sets) equal = equal && weight_of(s, combo) == first;
      rec.check("wwd_closure", equal);
    }

    if (!is_connected(g)) continue;
    ++summary.connected;
    if (!family_violation(g, kC4C5)) {
      bool characterized = is_well_dominated_c4c5(g);
      rec.check("c4c5_well_dominated_equivalence",
                characterized == orc.well_dominated() && characterized == orc.well_covered());
    }
    if (!family_violation(g, kC4C5C6)) {
      CharacterizationOutcome wcw = wcw_basis_c4c5c6(g, budget);
      CharacterizationOutcome wwd = wwd_basis_c4c5c6(g, budget);
      rec.check("wcw_matches_oracle", *wcw.basis == orc.wcw);
      rec.check("wwd_matches_oracle", *wwd.basis == orc.wwd);
      if (wwd.special_form == SpecialForm::General) {
        VertexSet lstar = lstar_set(g, budget);
        auto dim = static_cast<int>(orc.wwd.dimension());
        rec.check("wwd_dim_equals_alpha_lstar", dim == independence_number(g, lstar));
        rec.check("wwd_dim_equals_lstar_size", dim == lstar.size(), true);
      }
    }
  }
  return summary;
}

Json to_json(const PropertySummary& s) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["graphs"] = s.graphs;
  j["connected"] = s.connected;
  j["passed"] = s.passed();
  Json checks = Json::object();
  for (const auto& [name, t] : s.checks) {
    Json c = Json::object();
    c["run"] = t.run;
    c["failures"] = t.failures;
    c["informational"] = t.informational;
    checks[name] = c;
  }
  j["checks"] = checks;
  j["failure_examples"] = s.failure_examples;
  return j;
}

}  // namespace welldom
