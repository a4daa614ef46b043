#include "orthopack/mask.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

std::vector<long long> distinct_primes(long long n) {
  std::vector<long long> primes;
  for (long long f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      primes.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<long long> divisors_of(long long n) {
  std::vector<long long> divs;
  for (long long f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      divs.push_back(f);
      if (f != n / f) divs.push_back(n / f);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Exact quotient of polynomials over the integers; the divisor must be monic
// and must divide exactly.
std::vector<BigInt> exact_poly_div(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dd, 0);
  for (std::size_t pos = num.size(); pos-- > dd;) {
    const BigInt lead = num[pos];
    if (lead == 0) continue;
    quot[pos - dd] = lead;
    for (std::size_t i = 0; i <= dd; ++i) num[pos - dd + i] -= lead * den[i];
  }
  for (const BigInt& c : num)
    if (c != 0) throw ValidationError("cyclotomic division left a remainder");
  return quot;
}

// Squarefree case by the recursive product formula: x^n - 1 divided by the
// cyclotomic polynomials of all proper divisors.
std::vector<BigInt> cyclotomic_squarefree(long long n) {
  if (n == 1) return {BigInt(-1), BigInt(1)};
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (const long long d : divisors_of(n)) {
    if (d == n) continue;
    poly = exact_poly_div(std::move(poly), cyclotomic_coefficients(d));
  }
  return poly;
}

struct CycloShape {
  long long spacing = 1;                 // n / radical(n)
  std::vector<BigInt> radical_coeffs;    // cyclotomic polynomial of the radical
};

// The n-th cyclotomic polynomial is the radical's polynomial evaluated at
// x^(n/rad); only the radical needs actual polynomial division.
CycloShape cyclotomic_shape(long long n) {
  long long rad = 1;
  for (const long long p : distinct_primes(n)) rad *= p;
  return {n / rad, cyclotomic_squarefree(rad)};
}

bool all_zero(const std::vector<BigInt>& v, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (v[i] != 0) return false;
  return true;
}

// Remainder-is-zero test of folded by the d-th cyclotomic polynomial, using
// its sparse form (nonzero only at multiples of the spacing).
bool divisible_by_cyclotomic(std::vector<BigInt> folded, long long d) {
  const CycloShape shape = cyclotomic_shape(d);
  std::vector<std::pair<std::size_t, BigInt>> sparse;
  for (std::size_t i = 0; i + 1 < shape.radical_coeffs.size(); ++i)
    if (shape.radical_coeffs[i] != 0)
      sparse.emplace_back(i * static_cast<std::size_t>(shape.spacing), shape.radical_coeffs[i]);
  const std::size_t deg =
      (shape.radical_coeffs.size() - 1) * static_cast<std::size_t>(shape.spacing);
  for (std::size_t pos = folded.size(); pos-- > deg;) {
    const BigInt lead = folded[pos];
    if (lead == 0) continue;
    folded[pos] = 0;
    for (const auto& [dg, c] : sparse) folded[pos - deg + dg] -= lead * c;
  }
  return all_zero(folded, std::min(folded.size(), deg));
}

void check_mask(const MaskPolynomial& mask) {
  if (mask.modulus < 1) throw ValidationError("mask modulus must be positive");
  if (mask.coeffs.size() != static_cast<std::size_t>(mask.modulus))
    throw ValidationError("mask coefficient count must equal the modulus");
}

std::vector<BigInt> fold_mod(const MaskPolynomial& mask, long long d) {
  std::vector<BigInt> folded(static_cast<std::size_t>(d), 0);
  for (long long e = 0; e < mask.modulus; ++e)
    folded[static_cast<std::size_t>(e % d)] += mask.coeffs[static_cast<std::size_t>(e)];
  return folded;
}

long long reduce_mod(long long k, long long n) {
  const long long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

MaskPolynomial indicator_mask(const std::vector<long long>& residues, long long modulus) {
  if (modulus < 1) throw ValidationError("mask modulus must be positive");
  MaskPolynomial mask;
  mask.modulus = modulus;
  mask.coeffs.assign(static_cast<std::size_t>(modulus), 0);
  for (const long long r : residues) ++mask.coeffs[static_cast<std::size_t>(reduce_mod(r, modulus))];
  return mask;
}

std::vector<BigInt> cyclotomic_coefficients(long long n) {
  if (n < 1) throw ValidationError("cyclotomic index must be positive");
  const CycloShape shape = cyclotomic_shape(n);
  if (shape.spacing == 1) return shape.radical_coeffs;
  std::vector<BigInt> coeffs(
      (shape.radical_coeffs.size() - 1) * static_cast<std::size_t>(shape.spacing) + 1, 0);
  for (std::size_t i = 0; i < shape.radical_coeffs.size(); ++i)
    coeffs[i * static_cast<std::size_t>(shape.spacing)] = shape.radical_coeffs[i];
  return coeffs;
}

bool mask_vanishes(const MaskPolynomial& mask, long long k) {
  check_mask(mask);
  const long long g = std::gcd(mask.modulus, reduce_mod(k, mask.modulus));
  const long long d = mask.modulus / g;
  return divisible_by_cyclotomic(fold_mod(mask, d), d);
}

MaskZeroTable::MaskZeroTable(const MaskPolynomial& mask) : modulus_(mask.modulus) {
  check_mask(mask);
  for (const long long d : divisors_of(modulus_))
    by_order_[d] = divisible_by_cyclotomic(fold_mod(mask, d), d);
}

bool MaskZeroTable::vanishes(long long k) const {
  const long long g = std::gcd(modulus_, reduce_mod(k, modulus_));
  return by_order_.at(modulus_ / g);
}

}  // namespace orthopack
