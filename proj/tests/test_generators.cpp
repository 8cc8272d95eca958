#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "dist2/analysis.hpp"
#include "dist2/coloring.hpp"
#include "dist2/generators.hpp"
#include "dist2/graph.hpp"
#include "oracles.hpp"

using namespace dist2;

namespace {

bool regular(const Graph& g, int d) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

}  // namespace

TEST_CASE("the three degree-diameter-extremal graphs") {
  Graph c5 = moore_2_2();
  CHECK(c5.vertex_count() == 5);
  CHECK(regular(c5, 2));
  CHECK(girth(c5) == 5);

  Graph pet = moore_3_2();
  CHECK(pet.vertex_count() == 10);
  CHECK(regular(pet, 3));
  CHECK(girth(pet) == 5);
  for (int v = 0; v < pet.vertex_count(); ++v)
    CHECK(two_distance_profile(pet, v).d_star == 9);  // diameter 2

  Graph hs = moore_7_2();
  CHECK(hs.vertex_count() == 50);
  CHECK(regular(hs, 7));
  CHECK(girth(hs) == 5);
  for (int v = 0; v < hs.vertex_count(); ++v)
    CHECK(two_distance_profile(hs, v).d_star == 49);
}

TEST_CASE("girth-3 extremal construction") {
  for (int delta : {8, 10, 12}) {
    Graph g = wegner_girth3(delta);
    INFO("delta ", delta);
    CHECK(g.vertex_count() == 3 + (delta / 2 - 1) + delta / 2 + delta / 2);
    CHECK(g.max_degree() == delta);
    CHECK(g.degree(0) == delta);  // all three hubs hit delta exactly
    CHECK(g.degree(1) == delta);
    CHECK(g.degree(2) == delta);
    CHECK(girth(g) == 3);
  }
  // every vertex within distance 2 of everything: the square is complete,
  // so the 2-distance chromatic number equals n
  Graph g8 = wegner_girth3(8);
  CHECK(g8.vertex_count() == 14);
  ExactResult r = exact_chi2(g8);
  REQUIRE(r.exact);
  CHECK(r.upper_bound == 13);
}

TEST_CASE("girth-4 extremal construction") {
  for (int delta : {8, 10, 12}) {
    Graph g = wegner_girth4(delta);
    INFO("delta ", delta);
    CHECK(g.max_degree() == delta);
    CHECK(g.degree(0) == delta - 1);  // the two group-joined hubs
    CHECK(g.degree(1) == delta - 1);
    CHECK(g.degree(2) == delta);      // the third hub reaches delta
    CHECK(girth(g) == 4);
  }
  Graph g8 = wegner_girth4(8);
  CHECK(g8.vertex_count() == 14);
  ExactResult r = exact_chi2(g8);
  REQUIRE(r.exact);
  CHECK(r.upper_bound == 11);
}

TEST_CASE("extremal constructions reject bad parameters") {
  CHECK_THROWS_AS(wegner_girth3(7), std::invalid_argument);   // odd
  CHECK_THROWS_AS(wegner_girth3(6), std::invalid_argument);   // too small
  CHECK_THROWS_AS(wegner_girth4(9), std::invalid_argument);
  CHECK_THROWS_AS(wegner_girth4(0), std::invalid_argument);
  CHECK_THROWS_AS(wegner_girth4(-8), std::invalid_argument);
}

TEST_CASE("random_sparse: deterministic, connected, degree- and mad-capped") {
  Graph a = random_sparse(40, Rational(8, 3), 7, 12345);
  Graph b = random_sparse(40, Rational(8, 3), 7, 12345);
  CHECK(a.edges() == b.edges());

  for (auto [cap, dt] : {std::pair{Rational(8, 3), 6}, std::pair{Rational(8, 3), 8},
                         std::pair{Rational(14, 5), 10}, std::pair{Rational(14, 5), 12}}) {
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
      int n = dt + 4 + (int)(seed * 5 % 40);
      Graph g = random_sparse(n, cap, dt, seed);
      INFO("n ", n, " dt ", dt, " seed ", seed);
      CHECK(g.vertex_count() == n);
      CHECK(g.max_degree() == dt);
      CHECK(g.degree(0) == dt);
      CHECK(mad_exact(g) < cap);
      CHECK(connected_components(g).size() == 1);
    }
  }
}

TEST_CASE("random_sparse rejects bad parameters") {
  CHECK_THROWS_AS(random_sparse(1, Rational(8, 3), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_sparse(10, Rational(8, 3), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_sparse(10, Rational(8, 3), 10, 1), std::invalid_argument);
}

TEST_CASE("random_sparse reports infeasible sparsity caps") {
  // any tree on 6 vertices already has average degree 5/3 > 7/5
  CHECK_THROWS_WITH_AS(random_sparse(6, Rational(7, 5), 2, 1),
                       doctest::Contains("looser"), GraphError);
}

TEST_CASE("generator names round-trip and dispatch") {
  for (GeneratorKind k :
       {GeneratorKind::moore_2_2, GeneratorKind::moore_3_2, GeneratorKind::moore_7_2,
        GeneratorKind::wegner_girth3, GeneratorKind::wegner_girth4,
        GeneratorKind::random_sparse}) {
    CHECK(generator_kind_by_name(generator_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(generator_kind_by_name("nope"), std::invalid_argument);

  GeneratorSpec moore;
  moore.kind = GeneratorKind::moore_3_2;
  CHECK(generate(moore).vertex_count() == 10);

  GeneratorSpec weg;
  weg.kind = GeneratorKind::wegner_girth4;
  weg.delta = 10;
  CHECK(generate(weg).max_degree() == 10);

  GeneratorSpec rnd;
  rnd.kind = GeneratorKind::random_sparse;
  rnd.n = 33;
  rnd.mad_cap = Rational(8, 3);
  rnd.delta_target = 6;
  rnd.seed = 777;
  CHECK(generate(rnd).edges() == random_sparse(33, Rational(8, 3), 6, 777).edges());
}
