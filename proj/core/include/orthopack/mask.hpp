#pragma once

#include <map>
#include <vector>

#include "orthopack/rational.hpp"

namespace orthopack {

// Integer-coefficient polynomial of degree < modulus, representing a weighted
// subset of Z_modulus: coeffs[e] is the weight of the exponent e. Evaluating
// at the k-th power of a primitive modulus-th root of unity gives the discrete
// Fourier coefficient of the subset at frequency k.
struct MaskPolynomial {
  long long modulus = 1;
  std::vector<long long> coeffs;
};

// 0/1 mask of a residue set; inputs are reduced mod modulus and multiplicity
// is accumulated, so repeated residues yield weights above 1.
MaskPolynomial indicator_mask(const std::vector<long long>& residues, long long modulus);

// Coefficients of the n-th cyclotomic polynomial in ascending degree, exact.
std::vector<BigInt> cyclotomic_coefficients(long long n);

// True iff the mask evaluates to zero at the k-th power of a primitive
// modulus-th root of unity. That power is a primitive d-th root with
// d = modulus / gcd(modulus, k), and the value vanishes iff the d-th
// cyclotomic polynomial divides the mask folded mod x^d - 1; the test is
// exact integer polynomial division. k may be any integer (reduced mod
// modulus), and k = 0 reduces to a coefficient-sum test.
bool mask_vanishes(const MaskPolynomial& mask, long long k);

// The answer of mask_vanishes depends on k only through gcd(modulus, k), so
// one divisibility test per divisor of the modulus answers every frequency.
class MaskZeroTable {
 public:
  explicit MaskZeroTable(const MaskPolynomial& mask);

  long long modulus() const { return modulus_; }
  bool vanishes(long long k) const;

 private:
  long long modulus_ = 1;
  std::map<long long, bool> by_order_;
};

}  // namespace orthopack
