#pragma once

#include "dgp/geometry.hpp"
#include "dgp/rational.hpp"

#include <string>
#include <vector>

namespace dgp {

// One summand c * sqrt(r) with c a nonzero rational and r a squarefree
// positive integer (r == 1 encodes a plain rational summand).
struct Term {
  Rational coeff;
  Integer radicand;
};

// Exact value of the form sum_i c_i * sqrt(r_i). Supports exact comparison:
// identical expressions cancel symbolically, distinct values are separated by
// escalating-precision interval arithmetic, and near-ties fall back to a
// square-and-subtract sign computation. Comparison throws
// LengthComparisonError only when every strategy is exhausted.
class Length {
 public:
  Length() = default;  // zero
  static Length of(const Rational& value);
  // sqrt(r) for r >= 0; throws PreconditionError on negative input.
  static Length sqrt_of(const Rational& r);
  static Length distance(const Point& a, const Point& b);

  Length operator+(const Length& o) const;
  Length operator-(const Length& o) const;
  Length& operator+=(const Length& o);

  // Exact three-way comparison: -1, 0, +1.
  int compare(const Length& o) const;
  int compare(const Rational& r) const { return compare(Length::of(r)); }

  bool operator==(const Length& o) const { return compare(o) == 0; }
  bool operator!=(const Length& o) const { return compare(o) != 0; }
  bool operator<(const Length& o) const { return compare(o) < 0; }
  bool operator<=(const Length& o) const { return compare(o) <= 0; }
  bool operator>(const Length& o) const { return compare(o) > 0; }
  bool operator>=(const Length& o) const { return compare(o) >= 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational as_rational() const;  // throws InternalError if irrational

  const std::vector<Term>& terms() const { return terms_; }
  double approx() const;
  std::string str() const;

 private:
  // Sorted by radicand, coefficients merged, zero coefficients dropped.
  std::vector<Term> terms_;
};

}  // namespace dgp
