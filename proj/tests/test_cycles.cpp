#include <doctest.h>

#include "fixtures.hpp"
#include "sgspec/cycles.hpp"
#include "sgspec/error.hpp"
#include "sgspec/extremal.hpp"

using namespace sgspec;

TEST_CASE("CycleWitness canonical form") {
  const auto c6 = fixtures::negative_c6();
  const auto w = CycleWitness::from_vertices(c6, {3, 2, 1, 0, 5, 4});
  CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(w.sign == Sign::negative);
  CHECK(w.length() == 6);
  CHECK_THROWS_AS(CycleWitness::from_vertices(c6, {0, 1, 3}), Error);
  CHECK_THROWS_AS(CycleWitness::from_vertices(c6, {0, 1}), Error);
}

TEST_CASE("bipartition") {
  SUBCASE("negative C6") {
    const auto b = bipartition(fixtures::negative_c6());
    CHECK(b.left == std::vector<Vertex>{0, 2, 4});
    CHECK(b.right == std::vector<Vertex>{1, 3, 5});
    CHECK(b.r() == 3);
    CHECK(b.s() == 3);
  }
  SUBCASE("triangle is not bipartite") {
    const auto tri = fixtures::cycle(3, {0, 2});
    const auto check = check_bipartite(tri);
    REQUIRE_FALSE(check.bipartition);
    REQUIRE(check.odd_cycle);
    CHECK(check.odd_cycle->vertices == std::vector<Vertex>{0, 1, 2});
    try {
      bipartition(tri);
      FAIL("expected NotBipartite");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotBipartite);
    }
  }
  SUBCASE("odd cycle witness in a larger graph") {
    const auto c7 = fixtures::cycle(7);
    const auto check = check_bipartite(c7);
    REQUIRE(check.odd_cycle);
    CHECK(check.odd_cycle->length() == 7);
  }
  SUBCASE("construction (3,4) has sides 3 and 4") {
    const auto g = build_gamma_rs(ExtremalParams(3, 4));
    const auto b = bipartition(g);
    CHECK(b.r() == 3);
    CHECK(b.s() == 4);
    for (const auto& e : g.edges()) {
      const bool u_left = std::find(b.left.begin(), b.left.end(), e.u) != b.left.end();
      const bool v_left = std::find(b.left.begin(), b.left.end(), e.v) != b.left.end();
      CHECK(u_left != v_left);
    }
  }
}

TEST_CASE("is_balanced") {
  CHECK(is_balanced(fixtures::path(5, Sign::negative)).balanced);
  const SignedEdge forest[] = {{0, 1, Sign::negative}, {2, 3, Sign::negative}, {2, 4, Sign::positive}};
  CHECK(is_balanced(SignedGraph::from_edges(5, forest)).balanced);
  CHECK(is_balanced(fixtures::complete_bipartite(3, 3)).balanced);

  const auto res = is_balanced(fixtures::negative_c6());
  CHECK_FALSE(res.balanced);
  REQUIRE(res.negative_cycle);
  CHECK(res.negative_cycle->vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(res.negative_cycle->sign == Sign::negative);

  // Two negative edges on a C6 cancel.
  CHECK(is_balanced(fixtures::cycle(6, {0, 3})).balanced);
}

TEST_CASE("shortest_negative_cycle") {
  CHECK_FALSE(shortest_negative_cycle(fixtures::complete_bipartite(3, 3)).has_value());

  const auto c6 = shortest_negative_cycle(fixtures::negative_c6());
  REQUIRE(c6);
  CHECK(c6->length() == 6);
  CHECK(c6->sign == Sign::negative);

  // K4 with edge (0,1) negative: triangles through (0,1) are negative.
  const auto k4 = fixtures::with_negative(fixtures::complete(4), {0});
  const auto tri = shortest_negative_cycle(k4);
  REQUIRE(tri);
  CHECK(tri->length() == 3);
  CHECK(tri->vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(tri->sign == Sign::negative);
  CHECK_FALSE(has_chord(k4, *tri));
}

TEST_CASE("has_negative_c4") {
  for (int r = 3; r <= 6; ++r) {
    for (int s = r; s <= 7; ++s) CHECK_FALSE(has_negative_c4(build_gamma_rs(ExtremalParams(r, s))));
  }
  // K_{2,2} edges in order (0,2),(0,3),(1,2),(1,3).
  const auto k22 = fixtures::complete_bipartite(2, 2);
  const auto one = has_negative_c4(fixtures::with_negative(k22, {0}));
  REQUIRE(one);
  CHECK(one->length() == 4);
  CHECK(one->sign == Sign::negative);
  CHECK(one->vertices == std::vector<Vertex>{0, 2, 1, 3});
  // (0,2) and (1,3) share no vertex: the 4-cycle is positive.
  CHECK_FALSE(has_negative_c4(fixtures::with_negative(k22, {0, 3})));
}

TEST_CASE("chord detection") {
  auto edges = fixtures::cycle(6).edges();
  edges.push_back({0, 3, Sign::positive});
  const auto g = SignedGraph::from_edges(6, edges);
  const auto w = CycleWitness::from_vertices(g, {0, 1, 2, 3, 4, 5});
  CHECK(has_chord(g, w));
  CHECK_FALSE(has_chord(fixtures::cycle(6), CycleWitness::from_vertices(fixtures::cycle(6), {0, 1, 2, 3, 4, 5})));
}
