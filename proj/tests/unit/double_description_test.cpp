#include <random>

#include "doctest.h"

#include "dofregion/double_description.hpp"
#include "dofregion/linalg.hpp"
#include "dofregion/polytope.hpp"
#include "support/oracles.hpp"

using namespace dofregion;

TEST_CASE("cone generators of the nonnegative orthant") {
  MatrixXr c = -MatrixXr::Identity(3, 3);
  const ConeGenerators g = cone_generators(c);
  CHECK(g.lines.empty());
  CHECK(oracle::same_points(g.rays, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})}));
}

TEST_CASE("cone generators with lineality") {
  MatrixXr c(1, 3);
  c << 0, 0, -1;
  const ConeGenerators g = cone_generators(c);
  CHECK(g.lines.size() == 2);
  REQUIRE(g.rays.size() == 1);
  CHECK(equal(g.rays.front(), make_vector({0, 0, 1})));
  CHECK(linalg::span_rank(g.lines, 3) == 2);
}

TEST_CASE("polyhedron generators of an unbounded set") {
  MatrixXr a(2, 2);
  a << -1, 0, 0, -1;
  const PolyhedronGenerators g = polyhedron_generators(a, make_vector({0, 0}));
  CHECK_FALSE(g.empty());
  CHECK_FALSE(g.bounded());
  CHECK(oracle::same_points(g.points, {make_vector({0, 0})}));
  CHECK(g.rays.size() == 2);
}

TEST_CASE("polyhedron generators of an empty set") {
  MatrixXr a(2, 1);
  a << 1, -1;
  CHECK(polyhedron_generators(a, make_vector({0, -1})).empty());
}

TEST_CASE("vertices agree with the brute force oracle on random bounded polytopes") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> rhs(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 3;
    HPolytope p = HPolytope::box(n, -2, 2);
    for (int i = 0; i < 4 + trial % 5; ++i) {
      VectorXr a(n);
      for (int j = 0; j < n; ++j) a(j) = coef(rng);
      p.add({a, Rational(rhs(rng), 2)});
    }
    const auto expected = oracle::brute_force_vertices(p);
    if (expected.empty()) continue;
    CHECK(oracle::same_points(enumerate_vertices(p).vertices, expected));
    ++checked;
  }
  CHECK(checked > 60);
}
