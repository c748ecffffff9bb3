#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgp/errors.hpp"
#include "dgp/geodesic.hpp"

#include <random>

using namespace dgp;

namespace {

Polygon l_hexagon() {
  return Polygon::simple({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("visibility graph of a convex polygon is complete") {
  Polygon p = Polygon::simple({{0, 0}, {3, 0}, {4, 2}, {2, 4}, {-1, 1}});
  VisGraph g = visibility_graph(p);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(g.sees(i, j));
}

TEST_CASE("visibility graph of the L-hexagon misses exactly one pair") {
  Polygon L = l_hexagon();
  VisGraph g = visibility_graph(L);
  // Segments (2,0)-(1,2), (2,1)-(1,2), and (2,1)-(0,2) all cut through the
  // missing unit square [1,2]x[1,2]; every other pair is visible.
  auto invisible = [](size_t i, size_t j) {
    return (i == 1 && j == 4) || (i == 2 && j == 4) || (i == 2 && j == 5);
  };
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j)
      CHECK(g.sees(i, j) == !invisible(i, j));
}

TEST_CASE("geodesic distances") {
  Polygon L = l_hexagon();
  GeodesicOracle oracle(L);
  CHECK(oracle.distance(0, 0).is_zero());
  CHECK(oracle.distance(0, 1).as_rational() == Rational(2));
  // (2,1) to (1,2) bends at the reflex vertex (1,1): 1 + 1 = 2 exactly.
  CHECK(oracle.distance(2, 4).as_rational() == Rational(2));
  // Straight-line pairs match Euclidean distance.
  CHECK(oracle.distance(1, 5) == Length::distance({2, 0}, {0, 2}));
}

TEST_CASE("min pairwise vertex distance") {
  Polygon sq = Polygon::simple({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  GeodesicOracle osq(sq);
  CHECK(osq.min_pairwise_vertex_distance().as_rational() == Rational(1));
  GeodesicOracle oL((l_hexagon()));
  CHECK(oL.min_pairwise_vertex_distance().as_rational() == Rational(1));
}

TEST_CASE("dispersion") {
  Polygon sq = Polygon::simple({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  GeodesicOracle o(sq);
  CHECK_FALSE(o.dispersion({2}).has_value());
  CHECK(o.dispersion({0, 1})->as_rational() == Rational(1));
  CHECK(o.dispersion({0, 2}) == Length::sqrt_of(2));
  CHECK(o.dispersion({0, 1, 2})->as_rational() == Rational(1));
}

TEST_CASE("pair_distance_at_least_2 shortcut") {
  Polygon L = l_hexagon();
  GeodesicOracle o(L);
  CHECK(o.pair_distance_at_least_2(2, 4));   // invisible pair
  CHECK_FALSE(o.pair_distance_at_least_2(2, 3));  // adjacent, distance 1
  CHECK(o.pair_distance_at_least_2(1, 5));   // straight distance 2*sqrt(2)

  // Precondition enforcement: a polygon with a short edge.
  Polygon small = Polygon::simple({{0, 0}, {Rational(1, 2), 0},
                                   {Rational(1, 2), 2}, {0, 2}});
  GeodesicOracle os(small);
  CHECK_THROWS_AS(os.pair_distance_at_least_2(0, 2), PreconditionError);
}

TEST_CASE("property: shortcut agrees with exact geodesic on all pairs") {
  Polygon L = l_hexagon();
  GeodesicOracle o(L);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j)
      if (i != j)
        CHECK(o.pair_distance_at_least_2(i, j) ==
              (o.distance(i, j).compare(Rational(2)) >= 0));
}

TEST_CASE("property: triangle inequality and straight-line lower bound") {
  Polygon L = l_hexagon();
  GeodesicOracle o(L);
  for (size_t u = 0; u < 6; ++u) {
    for (size_t v = 0; v < 6; ++v) {
      Length straight = Length::distance(L.vertex(u), L.vertex(v));
      CHECK(o.distance(u, v) >= straight);
      bool vis = u == v || L.sees(L.vertex(u), L.vertex(v));
      CHECK((o.distance(u, v) == straight) == vis);
      for (size_t w = 0; w < 6; ++w)
        CHECK(o.distance(u, w) <= o.distance(u, v) + o.distance(v, w));
    }
  }
}
