#pragma once

#include <gmpxx.h>
#include <string>

namespace formdual {

using Rational = mpq_class;

// "p/q", or "p" for integers.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace formdual
