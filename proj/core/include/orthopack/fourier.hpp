#pragma once

#include <complex>
#include <vector>

#include "orthopack/certificate.hpp"
#include "orthopack/finite_group.hpp"
#include "orthopack/rational.hpp"
#include "orthopack/trig.hpp"

namespace orthopack {

// Union of half-open unit intervals [h, h+1) with integer starts, sorted and
// disjoint, all inside [0, modulus).
struct IntervalUnion {
  long long modulus = 1;
  std::vector<long long> starts;
};

void validate_interval_union(const IntervalUnion& h);

// The real-line lift of the squared-prime example: the interval union H
// together with the residue sets whose scaled copies x/N + Z give the
// orthogonal set and the reference spectrum.
struct LiftedExample {
  long long modulus = 1;
  IntervalUnion h;
  std::vector<long long> lambda_residues;
  std::vector<long long> gamma_residues;
};

LiftedExample lift_to_r(const CubeParams& params);

// Rectangular complex enclosure with fixed-point interval sides.
struct ComplexInterval {
  FixInterval re, im;

  // A rectangle misses the origin iff one side's interval does.
  bool excludes_zero() const { return re.excludes_zero() || im.excludes_zero(); }
  std::complex<double> midpoint() const { return {re.mid_double(), im.mid_double()}; }

  ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
  ComplexInterval operator*(const ComplexInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

// Enclosure of e^(-2 pi i t).
ComplexInterval unit_phase(const Rational& turns);

// Term-by-term exponential sum of the interleaved cube's Fourier transform at
// frequency xi/N, in plain floating point; serves as the cross-check oracle
// for the factored closed form.
std::complex<double> direct_ft_sum(const CubeParams& params, const Rational& xi);

// The three-factor form of the same transform: the product over the primes of
// the geometric sums over a < s of e^(-2 pi i a xi / s^2). The sum form is
// everywhere defined; the textbook quotient of the two cyclotomic-like
// differences is only a display form. Integer xi is outside the identity's
// hypothesis and is rejected.
ComplexInterval closed_form_ft(const CubeParams& params, const Rational& xi);

// Value of the interval union's Fourier transform together with what is known
// exactly about whether it vanishes.
struct FtEnclosure {
  ComplexInterval value;
  bool exact_zero = false;
  bool nonzero_certified = false;
};

// Fourier transform of the indicator of the interval union at a rational
// frequency: the exponential sum over the starts times the unit-interval
// factor. Integer frequencies and frequencies with denominator dividing the
// modulus are decided exactly (the latter through the mask polynomial);
// everything else gets a rigorous enclosure.
FtEnclosure ft_interval_union(const IntervalUnion& h, const Rational& xi);

// Two-part maximality certificate for the lifted set Lambda = lambda/N + Z:
// (a) exhaustive maximality of the residue set inside Z_N, exact via the mask
// table; (b) at every rational sample j/D in [0,1) whose reduced denominator
// does not divide N (those with D in the trial set), the transform of H is
// certified nonzero, so the sample cannot extend Lambda past the origin.
// Undecidable if some enclosure straddles zero.
Certificate lifted_maximality(const CubeParams& params, const std::vector<long long>& denominators);

}  // namespace orthopack
