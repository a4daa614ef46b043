#pragma once

#include <cstdint>

#include "orthopack/rational.hpp"

namespace orthopack {

// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw ValidationError("interval endpoints out of order");
  }
  static RationalInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }

  // True when [lo, hi] contains some integer.
  bool contains_integer() const { return rational_floor(hi) >= -floor_div(-numerator(lo), denominator(lo)); }

  RationalInterval operator+(const RationalInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RationalInterval operator-(const RationalInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RationalInterval operator-() const { return {-hi, -lo}; }

  RationalInterval scaled(const BigInt& c) const {
    if (c >= 0) return {lo * Rational(c), hi * Rational(c)};
    return {hi * Rational(c), lo * Rational(c)};
  }
};

}  // namespace orthopack
