#pragma once

#include <string>

#include <gmpxx.h>

namespace twistpost {

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Accepts "p", "-p", "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace twistpost
