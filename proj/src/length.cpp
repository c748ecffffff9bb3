#include "dgp/length.hpp"

#include "dgp/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace dgp {

namespace {

using Real = boost::multiprecision::mpfr_float;

// n = square * free with free squarefree, found by trial division up to 10^4
// plus a perfect-square test on the cofactor. A cofactor of the form p^2*q
// with p > 10^4 escapes canonicalization; such radicands never arise from the
// small coordinates used here, and a missed extraction only delays equality
// detection to the interval/symbolic comparators.
void extract_square(const Integer& n, Integer& square, Integer& free) {
  square = 1;
  free = 1;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest && p <= 10000; ++p) {
    int count = 0;
    while (rest % p == 0) {
      rest /= p;
      ++count;
    }
    for (int i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2 == 1) free *= p;
  }
  Integer root = sqrt(rest);
  if (root * root == rest) {
    square *= root;
  } else {
    free *= rest;
  }
}

std::vector<Term> normalize(std::map<Integer, Rational> acc) {
  std::vector<Term> out;
  for (auto& [rad, coeff] : acc) {
    if (coeff != 0) out.push_back({std::move(coeff), rad});
  }
  return out;
}

void accumulate(std::map<Integer, Rational>& acc, const Rational& coeff,
                const Integer& radicand) {
  Integer square, free;
  extract_square(radicand, square, free);
  acc[free] += coeff * square;
}

std::vector<Term> add_terms(const std::vector<Term>& a,
                            const std::vector<Term>& b, int sign_b) {
  std::map<Integer, Rational> acc;
  for (const Term& t : a) acc[t.radicand] += t.coeff;
  for (const Term& t : b) acc[t.radicand] += sign_b * t.coeff;
  return normalize(std::move(acc));
}

// (sum a_i)^2 - (sum b_j)^2, expanded and canonicalized.
std::vector<Term> square_difference(const std::vector<Term>& a,
                                    const std::vector<Term>& b) {
  std::map<Integer, Rational> acc;
  auto square_into = [&acc](const std::vector<Term>& v, int sign) {
    for (size_t i = 0; i < v.size(); ++i) {
      for (size_t j = 0; j < v.size(); ++j) {
        accumulate(acc, sign * v[i].coeff * v[j].coeff,
                   v[i].radicand * v[j].radicand);
      }
    }
  };
  square_into(a, 1);
  square_into(b, -1);
  return normalize(std::move(acc));
}

// Sign via interval evaluation at the given bit precision; 0 means "could not
// separate from zero", not equality.
int interval_sign(const std::vector<Term>& terms, unsigned bits) {
  const unsigned digits = static_cast<unsigned>(bits * 0.302) + 2;
  Real::default_precision(digits);
  Real value(0), magnitude(0);
  for (const Term& t : terms) {
    Real term = Real(t.coeff) * sqrt(Real(t.radicand));
    value += term;
    magnitude += abs(term);
  }
  // Each term costs O(1) roundings and each addition one more; a generous
  // uniform bound keeps the estimate rigorous.
  Real err = magnitude * (terms.size() + 8) * pow(Real(2), 4 - (int)bits);
  if (value > err) return 1;
  if (value < -err) return -1;
  return 0;
}

// Exact sign by repeated squaring: sign(P - N) = sign(P^2 - N^2) for P,N >= 0.
int exact_sign(const std::vector<Term>& terms, int depth) {
  if (terms.empty()) return 0;
  bool any_pos = false, any_neg = false;
  for (const Term& t : terms) (t.coeff > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  if (depth > 12 || terms.size() > 16)
    throw LengthComparisonError("length comparison did not terminate: " +
                                std::to_string(terms.size()) + " terms");
  std::vector<Term> pos, neg;
  for (const Term& t : terms) {
    if (t.coeff > 0)
      pos.push_back(t);
    else
      neg.push_back({-t.coeff, t.radicand});
  }
  return exact_sign(square_difference(pos, neg), depth + 1);
}

int sign_of_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return 0;
  if (terms.size() == 1) return terms[0].coeff > 0 ? 1 : -1;
  // Cheap symbolic path for short expressions, then escalating intervals.
  if (terms.size() <= 4) {
    try {
      return exact_sign(terms, 0);
    } catch (const LengthComparisonError&) {
    }
  }
  for (unsigned bits = 128; bits <= 4096; bits *= 2) {
    if (int s = interval_sign(terms, bits)) return s;
  }
  return exact_sign(terms, 0);
}

}  // namespace

Length Length::of(const Rational& value) {
  Length l;
  if (value != 0) l.terms_.push_back({value, Integer(1)});
  return l;
}

Length Length::sqrt_of(const Rational& r) {
  if (r < 0) throw PreconditionError("sqrt of negative rational");
  Length l;
  if (r == 0) return l;
  // sqrt(p/q) = sqrt(p*q) / q.
  std::map<Integer, Rational> acc;
  accumulate(acc, Rational(1, den(r)), num(r) * den(r));
  l.terms_ = normalize(std::move(acc));
  return l;
}

Length Length::distance(const Point& a, const Point& b) {
  return sqrt_of(squared_distance(a, b));
}

Length Length::operator+(const Length& o) const {
  Length l;
  l.terms_ = add_terms(terms_, o.terms_, 1);
  return l;
}

Length Length::operator-(const Length& o) const {
  Length l;
  l.terms_ = add_terms(terms_, o.terms_, -1);
  return l;
}

Length& Length::operator+=(const Length& o) {
  terms_ = add_terms(terms_, o.terms_, 1);
  return *this;
}

int Length::compare(const Length& o) const {
  return sign_of_terms(add_terms(terms_, o.terms_, -1));
}

bool Length::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

Rational Length::as_rational() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].radicand == 1) return terms_[0].coeff;
  throw InternalError("as_rational on irrational length");
}

double Length::approx() const {
  double v = 0;
  for (const Term& t : terms_)
    v += to_double(t.coeff) * std::sqrt(static_cast<double>(t.radicand));
  return v;
}

std::string Length::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.radicand == 1) {
      os << format_rational(t.coeff);
    } else {
      os << format_rational(t.coeff) << "*sqrt(" << t.radicand.str() << ")";
    }
  }
  return os.str();
}

}  // namespace dgp
