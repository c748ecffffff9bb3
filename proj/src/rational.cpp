#include "dgp/rational.hpp"

#include "dgp/errors.hpp"

#include <cctype>
#include <sstream>

namespace dgp {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer n(text.substr(0, slash));
    Integer d(text.substr(slash + 1));
    if (d == 0) throw ParseError("rational with zero denominator: " + text);
    return Rational(n, d);
  } catch (const std::exception&) {
    throw ParseError("malformed rational: '" + text + "'");
  }
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << num(q);
  if (den(q) != 1) os << '/' << den(q);
  return os.str();
}

}  // namespace dgp
