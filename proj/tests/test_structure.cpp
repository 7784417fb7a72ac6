#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "welldom/fixtures.hpp"
#include "welldom/generator.hpp"
#include "welldom/graph_algorithms.hpp"
#include "welldom/graph_io.hpp"
#include "welldom/independent_sets.hpp"
#include "welldom/oracle.hpp"
#include "welldom/structure.hpp"
#include "welldom/weightspace.hpp"

using namespace welldom;

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(path_graph(4)) == VertexSet{0, 3});
  CHECK(simplicial_vertices(complete_graph(3)) == VertexSet{0, 1, 2});
  CHECK(simplicial_vertices(cycle_graph(7)).empty());
  CHECK(simplicial_vertices(Graph(2)) == VertexSet{0, 1});
}

TEST_CASE("family F certificates") {
  auto p4 = family_f_certificate(path_graph(4));
  REQUIRE(p4.has_value());
  CHECK(p4->centers == std::vector<int>{0, 3});
  CHECK(verify_family_f_certificate(path_graph(4), *p4));
  CHECK_FALSE(family_f_certificate(cycle_graph(7)).has_value());
  CHECK_FALSE(family_f_certificate(path_graph(3)).has_value());
  CHECK(family_f_certificate(complete_graph(3)).has_value());

  FamilyFCertificate bogus{{0}, {VertexSet{0, 1}}};
  CHECK_FALSE(verify_family_f_certificate(path_graph(4), bogus));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    Graph g = brute::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.5)(rng));
    auto cert = family_f_certificate(g);
    REQUIRE_MESSAGE(cert.has_value() == brute::in_family_f(g), serialize_graph(g, GraphFormat::Graph6));
    if (cert) {
      CHECK(verify_family_f_certificate(g, *cert));
      // every maximal independent set picks one vertex per cell
      for (VertexSet s : brute::maximal_independent_sets(g)) CHECK(s.size() == int(cert->centers.size()));
    }
  }
}

TEST_CASE("L and D") {
  Graph p4 = path_graph(4);
  CHECK(l_set(p4) == VertexSet{0, 3});
  CHECK(d_set(p4, 1) == VertexSet{0});
  CHECK(d_set(p4, 2) == VertexSet{3});
  CHECK(l_set(cycle_graph(7)).empty());
  CHECK(l_set(triangle_with_pendants_graph()).size() == 3);

  // triangle 1,2,3 with pendants 0 on 1 and 4 on 2; vertex 3 fails the L* test
  Graph bull = bull_graph();
  CHECK(l_set(bull) == VertexSet{0, 3, 4});
  CHECK(lstar_set(bull) == VertexSet{0, 4});
  CHECK_FALSE(lstar_condition(bull, 3).holds);
  CHECK(l_set(two_c6_graph()).empty());
  CHECK(lstar_set(two_c6_graph()).empty());
}

TEST_CASE("L* properties") {
  FamilyGenerator gen(GeneratorConfig{.max_n = 11, .min_n = 3, .forbidden_cycles = {4, 5, 6}, .seed = 44,
                                      .count = 150, .connected = true});
  for (const Graph& g : gen.generate()) {
    VertexSet l = l_set(g), lstar = lstar_set(g);
    CHECK(lstar.is_subset_of(l));
    for (int v : l) {
      if (g.degree(v) == 1) CHECK(lstar.contains(v));
    }
    for (int v : l - lstar) {
      LStarWitness w = lstar_condition(g, v);
      CHECK_FALSE(w.holds);
      REQUIRE(w.violating_set.has_value());
      VertexSet outside = g.vertices() - n_ball(g, {v}, 2);
      CHECK(is_maximal_independent(g, *w.violating_set, outside));
    }
  }
}

TEST_CASE("independence number") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    int n = std::uniform_int_distribution<int>(0, 12)(rng);
    Graph g = brute::random_graph(rng, n, 0.3);
    VertexSet within(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
    CHECK(independence_number(g, within) == brute::independence_number(g, within));
    CHECK(independence_number(g) == brute::independence_number(g, g.vertices()));
  }
}

TEST_CASE("greedy maximal independent set") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = brute::random_graph(rng, 10, 0.3);
    VertexSet within(std::uniform_int_distribution<std::uint64_t>(0, 1023)(rng));
    VertexSet s = greedy_maximal_independent_set(g, within);
    CHECK(s.is_subset_of(within));
    CHECK(is_maximal_independent(g, s, within));
    if (!within.empty()) CHECK(s.contains(within.min()));
  }
}
