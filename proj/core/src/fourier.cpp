#include "orthopack/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "orthopack/errors.hpp"
#include "orthopack/mask.hpp"

namespace orthopack {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr long long kMaxTrialDenominator = 10'000'000;
constexpr long long kMaxSummedStarts = 1000;  // keeps interval sums inside int64

long long reduce_mod_ll(const BigInt& v, long long m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r.convert_to<long long>();
}

std::vector<long long> image_sorted(const CubeParams& params,
                                    const std::vector<GroupElement>& elements) {
  std::vector<long long> out;
  out.reserve(elements.size());
  for (const GroupElement& e : elements) out.push_back(phi(params, e));
  std::sort(out.begin(), out.end());
  return out;
}

FtEnclosure trivial_enclosure(long long count) {
  const std::int64_t c = static_cast<std::int64_t>(count) * kFixOne;
  return {{{-c, c}, {-c, c}}, false, false};
}

}  // namespace

void validate_interval_union(const IntervalUnion& h) {
  if (h.modulus < 1) throw ValidationError("interval union modulus must be positive");
  for (std::size_t i = 0; i < h.starts.size(); ++i) {
    if (h.starts[i] < 0 || h.starts[i] >= h.modulus)
      throw ValidationError("interval start outside [0, modulus)");
    if (i > 0 && h.starts[i] <= h.starts[i - 1])
      throw ValidationError("interval starts must be strictly increasing");
  }
}

LiftedExample lift_to_r(const CubeParams& params) {
  LiftedExample out;
  out.modulus = cube_modulus(params);
  out.h.modulus = out.modulus;
  out.h.starts = image_sorted(params, discrete_cube(params));
  out.lambda_residues = image_sorted(params, lambda0(params));
  out.gamma_residues = image_sorted(params, gamma0(params));
  return out;
}

ComplexInterval unit_phase(const Rational& turns) {
  const auto [c, s] = unit_circle(turns);
  return {c, -s};
}

std::complex<double> direct_ft_sum(const CubeParams& params, const Rational& xi) {
  const long long n = cube_modulus(params);
  std::complex<double> acc = 0.0;
  for (const GroupElement& e : discrete_cube(params)) {
    const Rational phase = Rational(phi(params, e)) * xi / n;
    const Rational frac = phase - Rational(rational_floor(phase));
    acc += std::polar(1.0, -kTwoPi * frac.convert_to<double>());
  }
  return acc;
}

ComplexInterval closed_form_ft(const CubeParams& params, const Rational& xi) {
  validate_cube_params(params);
  if (is_integral(xi)) throw DomainError("the factored transform identity assumes a non-integer frequency");
  ComplexInterval product{FixInterval::point(kFixOne), FixInterval::point(0)};
  for (const long long s : {params.p, params.q, params.r}) {
    const long long s2 = s * s;
    ComplexInterval factor{FixInterval::point(0), FixInterval::point(0)};
    for (long long a = 0; a < s; ++a) factor = factor + unit_phase(Rational(a) * xi / s2);
    product = product * factor;
  }
  return product;
}

FtEnclosure ft_interval_union(const IntervalUnion& h, const Rational& xi) {
  validate_interval_union(h);
  const long long count = static_cast<long long>(h.starts.size());
  if (xi == 0) {
    FtEnclosure out;
    out.value = {FixInterval::from_rational(Rational(count)), FixInterval::point(0)};
    out.exact_zero = count == 0;
    out.nonzero_certified = count > 0;
    return out;
  }
  if (is_integral(xi) || count == 0) {
    // The unit-interval factor vanishes at nonzero integers; an empty union
    // vanishes identically.
    return {{FixInterval::point(0), FixInterval::point(0)}, true, false};
  }

  bool mask_decided = false;
  if (BigInt(h.modulus) % denominator(xi) == 0) {
    const BigInt scale = BigInt(h.modulus) / denominator(xi);
    const long long k = reduce_mod_ll(numerator(xi) * scale, h.modulus);
    if (mask_vanishes(indicator_mask(h.starts, h.modulus), k))
      return {{FixInterval::point(0), FixInterval::point(0)}, true, false};
    mask_decided = true;  // exponential sum certified nonzero by the mask
  }

  if (count > kMaxSummedStarts) return trivial_enclosure(count);

  ComplexInterval expsum{FixInterval::point(0), FixInterval::point(0)};
  for (const long long start : h.starts) expsum = expsum + unit_phase(Rational(start) * xi);

  const FixInterval two_pi_xi = (fix_pi() + fix_pi()) * FixInterval::from_rational(xi);
  if (!two_pi_xi.excludes_zero()) return trivial_enclosure(count);
  const auto [cosv, sinv] = unit_circle(xi);
  const ComplexInterval interval_factor{fix_div(sinv, two_pi_xi),
                                        fix_div(cosv - FixInterval::point(kFixOne), two_pi_xi)};

  FtEnclosure out;
  out.value = expsum * interval_factor;
  out.exact_zero = false;
  // The unit-interval factor is exactly nonzero off the integers, so the
  // product is nonzero as soon as the exponential sum is.
  out.nonzero_certified = mask_decided || expsum.excludes_zero();
  return out;
}

Certificate lifted_maximality(const CubeParams& params,
                              const std::vector<long long>& denominators) {
  const long long n = cube_modulus(params);
  const std::set<long long> trials(denominators.begin(), denominators.end());
  if (trials.find(n) == trials.end())
    throw ValidationError("trial denominators must include the interval union's modulus");
  for (const long long d : trials)
    if (d < 1 || d > kMaxTrialDenominator)
      throw ValidationError("trial denominator out of range");

  const LiftedExample lift = lift_to_r(params);
  if (static_cast<long long>(lift.h.starts.size()) > kMaxSummedStarts)
    throw BoundExceeded("interval union too large for certified sums");
  const MaskZeroTable table(indicator_mask(lift.h.starts, n));

  // Part (a): the residue set cannot be extended inside Z_N; exact.
  std::vector<GroupElement> members;
  members.reserve(lift.lambda_residues.size());
  for (const long long x : lift.lambda_residues) members.push_back({x});
  const FiniteGroup zn({n});
  const Certificate part_a = exhaustive_maximality(
      members, [&table](const GroupElement& e) { return table.vanishes(e[0]); }, zn);
  if (!part_a.passed())
    return Certificate::fail("lifted_maximal", part_a.witness, {{"part", "residue_scan"}});

  // Part (b): at rational samples whose reduced denominator does not divide
  // N, the transform of H is certified nonzero, so no such sample can be
  // orthogonal to the origin's copy of H.
  long long samples = 0;
  for (const long long dprime : trials) {
    if (n % dprime == 0) continue;  // every j/dprime already lives in Z_N
    const UnitTable table_d(dprime);
    for (long long j = 1; j < dprime; ++j) {
      const long long g = std::gcd(j, dprime);
      if (n % (dprime / g) == 0) continue;  // reduced sample lives in Z_N
      FixInterval re_acc = FixInterval::point(0);
      FixInterval im_acc = FixInterval::point(0);
      for (const long long start : lift.h.starts) {
        const long long m = static_cast<long long>((__int128(start) * j) % dprime);
        re_acc = re_acc + table_d.cos_at(m);
        im_acc = im_acc - table_d.sin_at(m);
      }
      if (!re_acc.excludes_zero() && !im_acc.excludes_zero())
        return Certificate::undecidable(
            "lifted_maximal",
            {{"part", "rational_samples"}, {"denominator", dprime}, {"numerator", j}});
      ++samples;
    }
  }

  nlohmann::json details = part_a.details;
  details["rational_samples"] = samples;
  details["denominators"] = std::vector<long long>(trials.begin(), trials.end());
  return Certificate::pass("lifted_maximal", details);
}

}  // namespace orthopack
