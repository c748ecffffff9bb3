#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgp/errors.hpp"
#include "dgp/polygon.hpp"

#include <random>

using namespace dgp;

namespace {

Polygon unit_square() {
  return Polygon::simple({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Polygon l_hexagon() {
  return Polygon::simple({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

Polygon square_with_hole() {
  return Polygon::create({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                          {{1, 1}, {1, 3}, {3, 3}, {3, 1}}});
}

}  // namespace

TEST_CASE("validation rejects bad rings") {
  CHECK_THROWS_AS(Polygon::simple({{0, 0}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Polygon::simple({{0, 0}, {1, 0}, {1, 0}, {0, 1}}),
                  PreconditionError);
  // Bowtie.
  CHECK_THROWS_AS(Polygon::simple({{0, 0}, {1, 1}, {1, 0}, {0, 1}}),
                  PreconditionError);
  // Clockwise outer ring.
  CHECK_THROWS_AS(Polygon::simple({{0, 0}, {0, 1}, {1, 1}, {1, 0}}),
                  PreconditionError);
  // Counterclockwise hole.
  CHECK_THROWS_AS(
      Polygon::create({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                       {{1, 1}, {3, 1}, {3, 3}, {1, 3}}}),
      PreconditionError);
  // Hole outside.
  CHECK_THROWS_AS(
      Polygon::create({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                       {{5, 5}, {5, 6}, {6, 6}, {6, 5}}}),
      PreconditionError);
  // Hole touching the outer ring.
  CHECK_THROWS_AS(
      Polygon::create({{{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                       {{0, 1}, {1, 3}, {3, 3}, {3, 1}}}),
      PreconditionError);
}

TEST_CASE("vertex indexing") {
  Polygon p = square_with_hole();
  CHECK(p.vertex_count() == 8);
  CHECK(p.vertex(0) == Point{0, 0});
  CHECK(p.vertex(4) == Point{1, 1});
  CHECK(p.global_index(1, 2) == 6);
  auto [prev, next] = p.neighbours(4);
  CHECK(prev == 7);
  CHECK(next == 5);
  auto [prev0, next0] = p.neighbours(0);
  CHECK(prev0 == 3);
  CHECK(next0 == 1);
}

TEST_CASE("point containment") {
  Polygon sq = unit_square();
  CHECK(sq.contains({Rational(1, 2), Rational(1, 2)}) ==
        Containment::Interior);
  CHECK(sq.contains({0, Rational(1, 2)}) == Containment::Boundary);
  CHECK(sq.contains({1, 1}) == Containment::Boundary);
  CHECK(sq.contains({2, 0}) == Containment::Exterior);

  Polygon ph = square_with_hole();
  CHECK(ph.contains({2, 2}) == Containment::Exterior);
  CHECK(ph.contains({Rational(1, 2), 2}) == Containment::Interior);
  CHECK(ph.contains({1, 2}) == Containment::Boundary);
}

TEST_CASE("visibility in L-shaped hexagon") {
  Polygon L = l_hexagon();
  CHECK_FALSE(L.sees({2, 1}, {1, 2}));
  CHECK_FALSE(L.sees({2, 1}, {0, 2}));
  // Grazing the reflex vertex (1,1) counts as visible.
  CHECK(L.sees({2, 0}, {0, 2}));
  CHECK(L.sees({0, 0}, {2, 1}));
  CHECK(L.sees({0, 0}, {1, 2}));
  // Along an edge.
  CHECK(L.sees({0, 0}, {2, 0}));
}

TEST_CASE("visibility in convex polygon") {
  Polygon p = Polygon::simple({{0, 0}, {3, 0}, {4, 2}, {2, 4}, {-1, 1}});
  for (size_t i = 0; i < p.vertex_count(); ++i)
    for (size_t j = 0; j < p.vertex_count(); ++j)
      CHECK(p.sees(p.vertex(i), p.vertex(j)));
}

TEST_CASE("visibility blocked by hole") {
  Polygon ph = square_with_hole();
  CHECK_FALSE(ph.sees({0, 0}, {4, 4}));
  CHECK(ph.sees({0, 0}, {4, 0}));
  CHECK(ph.sees({0, 0}, {1, 1}));
  // Grazing a hole corner.
  CHECK(ph.sees({0, 2}, {Rational(1, 2), 2}));
}

TEST_CASE("reflex vertices") {
  Polygon L = l_hexagon();
  for (size_t i = 0; i < 6; ++i) {
    CHECK(L.is_reflex(i) == (L.vertex(i) == Point{1, 1}));
  }
  Polygon ph = square_with_hole();
  // Every hole vertex of a convex hole is reflex.
  for (size_t i = 4; i < 8; ++i) CHECK(ph.is_reflex(i));
  for (size_t i = 0; i < 4; ++i) CHECK_FALSE(ph.is_reflex(i));
}

TEST_CASE("property: containment agrees with double ray casting") {
  Polygon L = l_hexagon();
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> num(-2, 10);
  int tested = 0;
  for (int it = 0; it < 10000; ++it) {
    Point p{Rational(num(rng), 4), Rational(num(rng), 4)};
    Containment c = L.contains(p);
    if (c == Containment::Boundary) continue;
    // Floating-point crossing count, reliable away from the boundary.
    double px = to_double(p.x), py = to_double(p.y);
    bool inside = false;
    const auto& ring = L.rings()[0];
    for (size_t i = 0; i < ring.size(); ++i) {
      double ux = to_double(ring[i].x), uy = to_double(ring[i].y);
      double vx = to_double(ring[(i + 1) % ring.size()].x);
      double vy = to_double(ring[(i + 1) % ring.size()].y);
      if ((uy > py) != (vy > py) &&
          px < ux + (py - uy) * (vx - ux) / (vy - uy))
        inside = !inside;
    }
    CHECK((c == Containment::Interior) == inside);
    ++tested;
  }
  CHECK(tested > 5000);
}

TEST_CASE("property: sees is symmetric") {
  Polygon L = l_hexagon();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(0, 8);
  for (int it = 0; it < 500; ++it) {
    Point a{Rational(num(rng), 4), Rational(num(rng), 4)};
    Point b{Rational(num(rng), 4), Rational(num(rng), 4)};
    CHECK(L.sees(a, b) == L.sees(b, a));
  }
}
