#include "orthopack/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "orthopack/errors.hpp"

using namespace orthopack;

namespace {

const CubeParams kDefault{3, 5, 7};
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool contains_double(const FixInterval& i, double v) {
  return i.lo_double() - 1e-12 <= v && v <= i.hi_double() + 1e-12;
}

// Exactly representable random frequency in (0, n), bounded away from the
// integers so nothing in the suite depends on luck near a transform zero.
Rational random_frequency(std::mt19937_64& rng, long long n) {
  std::uniform_int_distribution<long long> whole(0, n - 1);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  return Rational(whole(rng)) + Rational(frac(rng));
}

}  // namespace

TEST_CASE("fixed-point intervals round outward and multiply by cases") {
  const FixInterval third = FixInterval::from_fraction(1, 3);
  CHECK(third.hi - third.lo == 1);
  CHECK(contains_double(third, 1.0 / 3.0));
  CHECK(FixInterval::from_fraction(1, 2).hi == FixInterval::from_fraction(1, 2).lo);
  CHECK(FixInterval::from_rational(make_rational(-1, 3)).lo == -third.hi);

  const FixInterval a{-kFixOne, kFixOne / 2};
  const FixInterval b{-kFixOne / 4, kFixOne};
  const FixInterval p = a * b;
  CHECK(contains_double(p, -1.0));
  CHECK(contains_double(p, 0.5));
  CHECK(contains_double(p, 0.25));

  CHECK(FixInterval::point(kFixOne).divided_by_positive(3).lo == third.lo);
  CHECK_THROWS_AS(FixInterval::point(1).divided_by_positive(0), ValidationError);
  CHECK_THROWS_AS(fix_div(FixInterval::point(kFixOne), FixInterval{-1, 1}), ValidationError);
  const FixInterval q = fix_div(FixInterval::point(kFixOne), FixInterval::point(-2 * kFixOne));
  CHECK(contains_double(q, -0.5));
  CHECK(q.hi - q.lo <= 2);
  CHECK_THROWS_AS(FixInterval::from_rational(Rational(BigInt(1) << 70)), ValidationError);
}

TEST_CASE("the pi enclosure brackets the double constant") {
  CHECK(contains_double(fix_pi(), 3.14159265358979323846));
  CHECK(fix_pi().hi - fix_pi().lo <= 2);
}

TEST_CASE("unit circle enclosures contain the library trigonometry") {
  for (int k = -300; k <= 1300; ++k) {
    const Rational t = make_rational(k, 997);
    const auto [c, s] = unit_circle(t);
    const double angle = kTwoPi * static_cast<double>(k) / 997.0;
    REQUIRE(contains_double(c, std::cos(angle)));
    REQUIRE(contains_double(s, std::sin(angle)));
    REQUIRE(c.hi - c.lo <= 16);
    REQUIRE(s.hi - s.lo <= 16);
  }
  const auto [c0, s0] = unit_circle(Rational(0));
  CHECK(contains_double(c0, 1.0));
  CHECK(contains_double(s0, 0.0));
  const auto [cq, sq] = unit_circle(make_rational(1, 4));
  CHECK(contains_double(cq, 0.0));
  CHECK(contains_double(sq, 1.0));
}

TEST_CASE("the tabulated circle matches the single evaluations") {
  const UnitTable table(360);
  CHECK(table.denominator() == 360);
  for (long long m = 0; m < 360; ++m) {
    const auto [c, s] = unit_circle(make_rational(m, 360));
    CHECK(table.cos_at(m).lo == c.lo);
    CHECK(table.cos_at(m).hi == c.hi);
    CHECK(table.sin_at(m).lo == s.lo);
    CHECK(table.sin_at(m).hi == s.hi);
  }
  CHECK_THROWS_AS(UnitTable(0), ValidationError);
}

TEST_CASE("a negated phase conjugates the unit phase enclosure") {
  const ComplexInterval plus = unit_phase(make_rational(1, 3));
  const ComplexInterval minus = unit_phase(make_rational(-1, 3));
  CHECK(contains_double(plus.re, std::cos(kTwoPi / 3)));
  CHECK(contains_double(plus.im, -std::sin(kTwoPi / 3)));
  CHECK(contains_double(minus.im, std::sin(kTwoPi / 3)));
}

TEST_CASE("the factored transform matches the direct sum at fixed frequencies") {
  for (const Rational xi : {make_rational(1, 2), make_rational(3, 10), make_rational(22, 7),
                            make_rational(-13, 6), make_rational(30001, 3)}) {
    const std::complex<double> direct = direct_ft_sum(kDefault, xi);
    const ComplexInterval closed = closed_form_ft(kDefault, xi);
    REQUIRE(std::abs(direct - closed.midpoint()) < 1e-9);
    REQUIRE(contains_double(closed.re, direct.real()));
    REQUIRE(contains_double(closed.im, direct.imag()));
  }
}

TEST_CASE("the factored transform rejects integer frequencies") {
  CHECK_THROWS_AS(closed_form_ft(kDefault, Rational(0)), DomainError);
  CHECK_THROWS_AS(closed_form_ft(kDefault, Rational(1)), DomainError);
  CHECK_THROWS_AS(closed_form_ft(kDefault, Rational(-3)), DomainError);
}

TEST_CASE("random frequencies agree across both transform forms and never vanish") {
  std::mt19937_64 rng(20260816);
  const long long n = cube_modulus(kDefault);
  for (int trial = 0; trial < 10000; ++trial) {
    const Rational xi = random_frequency(rng, n);
    const ComplexInterval closed = closed_form_ft(kDefault, xi);
    REQUIRE(closed.excludes_zero());
    if (trial % 10 == 0) {
      const std::complex<double> direct = direct_ft_sum(kDefault, xi);
      REQUIRE(std::abs(direct - closed.midpoint()) < 1e-9);
    }
  }
}

TEST_CASE("the lift packages the interval union and both residue sets") {
  const LiftedExample lift = lift_to_r(kDefault);
  CHECK(lift.modulus == 11025);
  CHECK(lift.h.modulus == 11025);
  CHECK(lift.h.starts.size() == 105);
  CHECK(lift.lambda_residues.size() == 45);
  CHECK(lift.gamma_residues.size() == 105);
  CHECK_NOTHROW(validate_interval_union(lift.h));
  CHECK(std::is_sorted(lift.lambda_residues.begin(), lift.lambda_residues.end()));
  CHECK(lift.lambda_residues.front() == 0);  // the origin lifts
  CHECK(lift.h.starts.front() == 0);
  CHECK(lift.h.starts.back() < 11025);
  // The largest interleaved representative, computed by hand.
  CHECK(lift.h.starts.back() == 5564);
}

TEST_CASE("interval union validation rejects malformed inputs") {
  CHECK_THROWS_AS(validate_interval_union({0, {}}), ValidationError);
  CHECK_THROWS_AS(validate_interval_union({10, {3, 3}}), ValidationError);
  CHECK_THROWS_AS(validate_interval_union({10, {5, 2}}), ValidationError);
  CHECK_THROWS_AS(validate_interval_union({10, {-1}}), ValidationError);
  CHECK_THROWS_AS(validate_interval_union({10, {10}}), ValidationError);
  CHECK_NOTHROW(validate_interval_union({10, {0, 2, 9}}));
}

TEST_CASE("the interval union transform is exact at the decided frequencies") {
  const LiftedExample lift = lift_to_r(kDefault);

  const FtEnclosure at_zero = ft_interval_union(lift.h, Rational(0));
  CHECK_FALSE(at_zero.exact_zero);
  CHECK(at_zero.nonzero_certified);
  CHECK(at_zero.value.re.lo == at_zero.value.re.hi);
  CHECK(at_zero.value.midpoint() == std::complex<double>(105.0, 0.0));

  CHECK(ft_interval_union(lift.h, Rational(1)).exact_zero);
  CHECK(ft_interval_union(lift.h, Rational(-7)).exact_zero);

  // 1/3 = 3675/11025 and the first coordinate of its preimage is a nonzero
  // multiple of 3, so the mask vanishes there.
  CHECK(ft_interval_union(lift.h, make_rational(1, 3)).exact_zero);
  CHECK(ft_interval_union(lift.h, make_rational(3675, 11025)).exact_zero);

  // 1/11025 has full denominator and a nonvanishing mask.
  const FtEnclosure unit = ft_interval_union(lift.h, make_rational(1, 11025));
  CHECK_FALSE(unit.exact_zero);
  CHECK(unit.nonzero_certified);

  const IntervalUnion empty{11025, {}};
  CHECK(ft_interval_union(empty, make_rational(1, 2)).exact_zero);
}

TEST_CASE("the interval union transform matches a direct oracle at one half") {
  const LiftedExample lift = lift_to_r(kDefault);
  const FtEnclosure enc = ft_interval_union(lift.h, make_rational(1, 2));
  CHECK_FALSE(enc.exact_zero);
  CHECK(enc.nonzero_certified);

  // Hand oracle: the alternating sum over the starts is 53 - 52 = 1, and the
  // unit-interval factor at one half is -(2/pi) i, so the value is -(2/pi) i.
  long long alternating = 0;
  for (const long long h : lift.h.starts) alternating += (h % 2 == 0) ? 1 : -1;
  CHECK(alternating == 1);
  const std::complex<double> oracle(0.0, -2.0 / 3.14159265358979323846);
  CHECK(std::abs(enc.value.midpoint() - oracle) < 1e-9);

  // Cross-check the enclosure against a floating evaluation at an undecided
  // frequency with a large denominator.
  const Rational xi = make_rational(355, 113000);
  const FtEnclosure generic = ft_interval_union(lift.h, xi);
  std::complex<double> expsum = 0.0;
  const double x = static_cast<double>(355) / 113000.0;
  for (const long long h : lift.h.starts) expsum += std::polar(1.0, -kTwoPi * h * x);
  const std::complex<double> factor(std::sin(kTwoPi * x) / (kTwoPi * x),
                                    (std::cos(kTwoPi * x) - 1.0) / (kTwoPi * x));
  CHECK(std::abs(generic.value.midpoint() - expsum * factor) < 1e-7);
}

TEST_CASE("the lifted set is maximal by the two-part certificate") {
  const long long n = cube_modulus(kDefault);
  const Certificate cert = lifted_maximality(kDefault, {n, 2 * n, 3 * n, 7 * n});
  REQUIRE(cert.verdict == Verdict::Pass);
  CHECK(cert.check == "lifted_maximal");
  // Odd j below 2N, then 3- and 7-free counts below 3N and 7N.
  CHECK(cert.details.at("rational_samples") == 11025 + 22050 + 66150);
  CHECK(cert.details.at("set_size") == 45);

  CHECK_THROWS_AS(lifted_maximality(kDefault, {2 * n}), ValidationError);
  CHECK_THROWS_AS(lifted_maximality(kDefault, {n, 0}), ValidationError);
  CHECK_THROWS_AS(lifted_maximality(kDefault, {n, 100'000'000}), ValidationError);
}
