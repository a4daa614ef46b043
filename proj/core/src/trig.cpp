#include "orthopack/trig.hpp"

#include <algorithm>
#include <stdexcept>

#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

using int128 = __int128;

std::int64_t floor_div_128(int128 a, int128 b) {
  int128 q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div_128(int128 a, int128 b) {
  int128 q = a / b;
  if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
  return static_cast<std::int64_t>(q);
}

std::int64_t floor_shift(int128 v) { return static_cast<std::int64_t>(v >> kFixShift); }
std::int64_t ceil_shift(int128 v) { return static_cast<std::int64_t>(-((-v) >> kFixShift)); }

}  // namespace

FixInterval FixInterval::from_fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw ValidationError("fixed-point fraction needs a positive denominator");
  const int128 scaled = int128(num) << kFixShift;
  const std::int64_t lo = floor_div_128(scaled, den);
  const std::int64_t hi = (scaled % den == 0) ? lo : lo + 1;
  return {lo, hi};
}

FixInterval FixInterval::from_rational(const Rational& q) {
  const BigInt scaled = numerator(q) * (BigInt(1) << kFixShift);
  const BigInt den = denominator(q);
  const BigInt fl = floor_div(scaled, den);
  const BigInt bound = BigInt(1) << 62;
  if (fl > bound || fl < -bound) throw ValidationError("fixed-point range exceeded");
  const std::int64_t lo = fl.convert_to<std::int64_t>();
  const std::int64_t hi = (fl * den == scaled) ? lo : lo + 1;
  return {lo, hi};
}

FixInterval FixInterval::operator*(const FixInterval& o) const {
  const int128 a = int128(lo) * o.lo;
  const int128 b = int128(lo) * o.hi;
  const int128 c = int128(hi) * o.lo;
  const int128 d = int128(hi) * o.hi;
  const int128 pmin = std::min(std::min(a, b), std::min(c, d));
  const int128 pmax = std::max(std::max(a, b), std::max(c, d));
  return {floor_shift(pmin), ceil_shift(pmax)};
}

FixInterval FixInterval::divided_by_positive(std::int64_t k) const {
  if (k <= 0) throw ValidationError("divisor must be positive");
  return {floor_div_128(lo, k), ceil_div_128(hi, k)};
}

FixInterval fix_div(const FixInterval& num, const FixInterval& den) {
  if (!den.excludes_zero()) throw ValidationError("interval division by an interval containing zero");
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const std::int64_t a : {num.lo, num.hi}) {
    for (const std::int64_t c : {den.lo, den.hi}) {
      const int128 scaled = int128(a) << kFixShift;
      lo = std::min(lo, floor_div_128(scaled, c));
      hi = std::max(hi, ceil_div_128(scaled, c));
    }
  }
  return {lo, hi};
}

namespace {

struct PiConstants {
  FixInterval pi;
  FixInterval pi_quarter;
};

const PiConstants& pi_constants() {
  static const PiConstants c = [] {
    // 3.1415926535897932384626433832795028841971693993751(0...)
    const BigInt num("31415926535897932384626433832795028841971693993751");
    BigInt den = 1;
    for (int i = 0; i < 49; ++i) den *= 10;
    const Rational lo = make_rational(num, den);
    const Rational hi = make_rational(num + 1, den);
    PiConstants out;
    out.pi = {FixInterval::from_rational(lo).lo, FixInterval::from_rational(hi).hi};
    out.pi_quarter = {FixInterval::from_rational(lo / 4).lo, FixInterval::from_rational(hi / 4).hi};
    return out;
  }();
  return c;
}

// cos and sin enclosures for theta in [0, pi/4], by alternating Taylor series
// evaluated outward; the truncation remainder is below one raw unit and is
// absorbed by the +-1 padding.
std::pair<FixInterval, FixInterval> taylor_cos_sin(const FixInterval& theta) {
  const FixInterval t2 = theta * theta;

  FixInterval cosv = FixInterval::point(kFixOne);
  FixInterval power = FixInterval::point(kFixOne);
  std::int64_t factorial = 1;
  for (int k = 1; k <= 9; ++k) {
    power = power * t2;
    factorial *= std::int64_t(2 * k - 1) * (2 * k);
    const FixInterval term = power.divided_by_positive(factorial);
    cosv = (k % 2 == 1) ? cosv - term : cosv + term;
  }
  cosv.lo -= 1;
  cosv.hi += 1;

  FixInterval inner = FixInterval::point(kFixOne);
  power = FixInterval::point(kFixOne);
  factorial = 1;
  for (int k = 1; k <= 8; ++k) {
    power = power * t2;
    factorial *= std::int64_t(2 * k) * (2 * k + 1);
    const FixInterval term = power.divided_by_positive(factorial);
    inner = (k % 2 == 1) ? inner - term : inner + term;
  }
  FixInterval sinv = theta * inner;
  sinv.lo -= 1;
  sinv.hi += 1;

  cosv.lo = std::max<std::int64_t>(cosv.lo, 0);
  cosv.hi = std::min(cosv.hi, kFixOne);
  sinv.lo = std::max<std::int64_t>(sinv.lo, 0);
  sinv.hi = std::min(sinv.hi, kFixOne);
  return {cosv, sinv};
}

// Angle 2*pi*t with t = quarter/4 + v, where x8 encloses 8*min(v, 1/4 - v)
// and swapped says the complement was taken (cos/sin exchange).
std::pair<FixInterval, FixInterval> circle_from_reduced(int quarter, const FixInterval& x8,
                                                        bool swapped) {
  const FixInterval theta = x8 * pi_constants().pi_quarter;
  auto [c, s] = taylor_cos_sin(theta);
  if (swapped) std::swap(c, s);
  switch (quarter & 3) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

}  // namespace

const FixInterval& fix_pi() { return pi_constants().pi; }

std::pair<FixInterval, FixInterval> unit_circle(const Rational& turns) {
  const Rational t = turns - Rational(rational_floor(turns));
  const BigInt qb = rational_floor(Rational(4) * t);
  const int quarter = qb.convert_to<int>();
  const Rational v = t - make_rational(quarter, 4);
  const bool swapped = v > make_rational(1, 8);
  const Rational w = swapped ? make_rational(1, 4) - v : v;
  const FixInterval x8 = FixInterval::from_rational(Rational(8) * w);
  return circle_from_reduced(quarter, x8, swapped);
}

UnitTable::UnitTable(std::int64_t denominator) : den_(denominator) {
  if (den_ < 1 || den_ > (std::int64_t(1) << 40))
    throw ValidationError("unit table denominator out of range");
  const std::size_t n = static_cast<std::size_t>(den_);
  cos_lo_.resize(n);
  cos_hi_.resize(n);
  sin_lo_.resize(n);
  sin_hi_.resize(n);
  for (std::int64_t m = 0; m < den_; ++m) {
    const std::int64_t quarter = (4 * m) / den_;
    const std::int64_t v_num = 4 * m - quarter * den_;  // v = v_num / (4 den)
    const bool swapped = 2 * v_num > den_;
    const std::int64_t w_num = swapped ? den_ - v_num : v_num;
    const FixInterval x8 = FixInterval::from_fraction(2 * w_num, den_);
    const auto [c, s] = circle_from_reduced(static_cast<int>(quarter), x8, swapped);
    const std::size_t i = static_cast<std::size_t>(m);
    cos_lo_[i] = c.lo;
    cos_hi_[i] = c.hi;
    sin_lo_[i] = s.lo;
    sin_hi_[i] = s.hi;
  }
}

}  // namespace orthopack
