#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "orthopack/errors.hpp"

namespace orthopack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's (num, den) constructor rejects negative denominators; dividing
// normalizes both sign and gcd.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  return Rational(num) / Rational(den);
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Floor division; cpp_int's operator/ truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt rational_floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

// Canonical text form "p/q", reduced, q > 0. Parsing accepts "p" as "p/1".
std::string rational_repr(const Rational& q);
Rational parse_rational(std::string_view s);

}  // namespace orthopack
