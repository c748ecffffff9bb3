#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgp/errors.hpp"
#include "dgp/length.hpp"

#include <random>

using namespace dgp;

TEST_CASE("rational lengths") {
  Length a = Length::of(Rational(3, 2));
  Length b = Length::of(Rational(1, 2));
  CHECK((a + b).as_rational() == Rational(2));
  CHECK((a - b).as_rational() == Rational(1));
  CHECK(a > b);
  CHECK((a - a).is_zero());
}

TEST_CASE("square roots canonicalize") {
  // sqrt(4) = 2, sqrt(8) = 2*sqrt(2), sqrt(1/2) = sqrt(2)/2.
  CHECK(Length::sqrt_of(4).as_rational() == Rational(2));
  CHECK(Length::sqrt_of(8) == Length::sqrt_of(2) + Length::sqrt_of(2));
  CHECK(Length::sqrt_of(Rational(1, 2)) + Length::sqrt_of(Rational(1, 2)) ==
        Length::sqrt_of(2));
  CHECK(Length::sqrt_of(Rational(9, 4)).as_rational() == Rational(3, 2));
  CHECK_THROWS_AS(Length::sqrt_of(-1), PreconditionError);
}

TEST_CASE("distance on Pythagorean triples is rational") {
  Length d = Length::distance({0, 0}, {3, 4});
  CHECK(d.is_rational());
  CHECK(d.as_rational() == Rational(5));
  Length u = Length::distance({0, 0}, {Rational(209, 241), Rational(120, 241)});
  CHECK(u.as_rational() == Rational(1));
}

TEST_CASE("exact comparisons of distinct roots") {
  CHECK(Length::sqrt_of(2) < Length::of(Rational(3, 2)));
  CHECK(Length::sqrt_of(2) > Length::of(Rational(7, 5)));
  CHECK(Length::sqrt_of(2) + Length::sqrt_of(3) <
        Length::sqrt_of(5) + Length::sqrt_of(1));
  // Tight comparisons around (sqrt(2)+sqrt(3))^2 = 5 + 2*sqrt(6) ~ 9.89898.
  CHECK(Length::sqrt_of(2) + Length::sqrt_of(3) <
        Length::sqrt_of(Rational(98990, 10000)));
  CHECK(Length::sqrt_of(2) + Length::sqrt_of(3) >
        Length::sqrt_of(Rational(98989, 10000)));
}

TEST_CASE("symbolic equalities that intervals cannot separate") {
  // (sqrt(2)+sqrt(8)) == sqrt(18)
  CHECK(Length::sqrt_of(2) + Length::sqrt_of(8) == Length::sqrt_of(18));
  // sqrt(3)+sqrt(12) == sqrt(27)
  CHECK(Length::sqrt_of(3) + Length::sqrt_of(12) == Length::sqrt_of(27));
}

TEST_CASE("comparison is a total order consistent with doubles") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(0, 50);
  std::vector<Length> vals;
  for (int i = 0; i < 40; ++i)
    vals.push_back(Length::sqrt_of(d(rng)) + Length::sqrt_of(Rational(d(rng), 7)));
  for (const Length& x : vals) {
    for (const Length& y : vals) {
      int c = x.compare(y);
      CHECK(c == -y.compare(x));
      if (std::abs(x.approx() - y.approx()) > 1e-9)
        CHECK(c == (x.approx() < y.approx() ? -1 : 1));
    }
  }
}
