#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace dgp {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Integer& z) { return z.sign(); }

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "p", "-p", or "p/q". Throws std::runtime_error on junk.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when q == 1) form.
std::string format_rational(const Rational& q);

}  // namespace dgp
