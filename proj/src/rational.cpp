#include "twistpost/rational.hpp"

#include <regex>

#include "twistpost/error.hpp"

namespace twistpost {

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace twistpost
