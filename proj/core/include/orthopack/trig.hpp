#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orthopack/rational.hpp"

namespace orthopack {

// Fixed-point interval arithmetic for rigorous trigonometric enclosures.
// Raw values are scaled by 2^kFixShift; the representable magnitude budget
// (about 2^62 raw) comfortably holds sums of a few hundred unit vectors.
inline constexpr int kFixShift = 52;
inline constexpr std::int64_t kFixOne = std::int64_t(1) << kFixShift;

struct FixInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static FixInterval point(std::int64_t raw) { return {raw, raw}; }
  // Outward-rounded conversion; |num/den| must stay below 2^10.
  static FixInterval from_fraction(std::int64_t num, std::int64_t den);
  static FixInterval from_rational(const Rational& q);

  FixInterval operator+(const FixInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  FixInterval operator-(const FixInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  FixInterval operator-() const { return {-hi, -lo}; }
  FixInterval operator*(const FixInterval& o) const;            // outward
  FixInterval divided_by_positive(std::int64_t k) const;        // exact k > 0, outward

  bool excludes_zero() const { return lo > 0 || hi < 0; }
  bool contains(std::int64_t raw) const { return lo <= raw && raw <= hi; }

  double lo_double() const { return double(lo) / double(kFixOne); }
  double hi_double() const { return double(hi) / double(kFixOne); }
  double mid_double() const { return (lo_double() + hi_double()) / 2; }
  double width_double() const { return hi_double() - lo_double(); }
};

// Outward-rounded quotient; the divisor interval must exclude zero.
FixInterval fix_div(const FixInterval& num, const FixInterval& den);

// Enclosure of pi from a 50-digit decimal literal.
const FixInterval& fix_pi();

// (cos, sin) enclosure of the angle 2*pi*turns; turns is reduced mod 1
// exactly, then folded into [0, pi/4] by quarter/octant symmetry, where a
// Taylor expansion with an explicit remainder bound is evaluated outward.
std::pair<FixInterval, FixInterval> unit_circle(const Rational& turns);

// Precomputed (cos, sin) enclosures of 2*pi*m/denominator for all residues m.
class UnitTable {
 public:
  explicit UnitTable(std::int64_t denominator);

  std::int64_t denominator() const { return den_; }
  FixInterval cos_at(std::int64_t m) const {
    return {cos_lo_[static_cast<std::size_t>(m)], cos_hi_[static_cast<std::size_t>(m)]};
  }
  FixInterval sin_at(std::int64_t m) const {
    return {sin_lo_[static_cast<std::size_t>(m)], sin_hi_[static_cast<std::size_t>(m)]};
  }

 private:
  std::int64_t den_;
  std::vector<std::int64_t> cos_lo_, cos_hi_, sin_lo_, sin_hi_;
};

}  // namespace orthopack
