#pragma once

#include <functional>
#include <vector>

#include "orthopack/certificate.hpp"

namespace orthopack {

// Element of a finite abelian product group, componentwise reduced residues.
using GroupElement = std::vector<long long>;

// Z_{n1} x ... x Z_{nk} with componentwise arithmetic and a mixed-radix
// indexing of all elements (last coordinate fastest).
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<long long> moduli);

  std::size_t rank() const { return moduli_.size(); }
  long long modulus(std::size_t i) const { return moduli_[i]; }
  const std::vector<long long>& moduli() const { return moduli_; }
  long long order() const { return order_; }

  GroupElement reduce(GroupElement e) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& e) const;

  GroupElement element_at(long long index) const;
  long long index_of(const GroupElement& e) const;

 private:
  void check_element(const GroupElement& e) const;

  std::vector<long long> moduli_;
  long long order_ = 1;
};

// Parameters of the squared-prime product group Z_{p^2} x Z_{q^2} x Z_{r^2};
// p < q < r must be distinct odd primes.
struct CubeParams {
  long long p = 3;
  long long q = 5;
  long long r = 7;
};

void validate_cube_params(const CubeParams& params);
FiniteGroup cube_group(const CubeParams& params);
long long cube_modulus(const CubeParams& params);  // N = (pqr)^2

// The interleaving isomorphism Z_{p^2} x Z_{q^2} x Z_{r^2} -> Z_N given by
// (a,b,c) -> q^2 r^2 a + p^2 r^2 b + p^2 q^2 c mod N, and its inverse.
long long phi(const CubeParams& params, const GroupElement& e);
GroupElement phi_inverse(const CubeParams& params, long long x);

// The discrete cube {0..p-1} x {0..q-1} x {0..r-1}, a tile of size pqr.
std::vector<GroupElement> discrete_cube(const CubeParams& params);

// Zero set of the discrete cube's Fourier transform: some coordinate is a
// nonzero multiple of its prime (first of p, second of q, third of r).
bool ft_zero_set_h0(const CubeParams& params, const GroupElement& e);

// The spectrum {(u,v,w) : p|u, q|v, r|w}, same cardinality as the cube.
std::vector<GroupElement> gamma0(const CubeParams& params);

// The maximal-but-incomplete orthogonal set: the origin plus three biprime
// families (n,1-k,1), (1,k,1-m), (1-n,1,m) over nonzero multiples n of p,
// k of q, m of r; its size 1+(p-1)(q-1)+(q-1)(r-1)+(p-1)(r-1) stays below
// the cube's size pqr.
std::vector<GroupElement> lambda0(const CubeParams& params);

// Scans every group element outside the set for an extension (an s whose
// difference to every member lies in the zero set). Pass means no extension
// exists; Fail carries the first extension found. Throws BoundExceeded when
// |G| * |set| exceeds the budget of membership tests.
Certificate exhaustive_maximality(const std::vector<GroupElement>& members,
                                  const std::function<bool(const GroupElement&)>& zero,
                                  const FiniteGroup& group, long long budget = 10'000'000);

// True iff every group element has exactly one representation e + t.
bool tiling_check(const std::vector<GroupElement>& tile, const std::vector<GroupElement>& translates,
                  const FiniteGroup& group);

// Pass iff the candidate has the expected cardinality and is pairwise
// orthogonal under the zero predicate; an orthogonal family of full size is
// automatically complete.
Certificate spectrum_check(const std::vector<GroupElement>& candidate,
                           const std::function<bool(const GroupElement&)>& zero,
                           const FiniteGroup& group, std::size_t expected_size);

// Exact check that every residue representative of the interleaved cube stays
// below N, so the isomorphism needs no wraparound on the cube:
// q^2 r^2 (p-1) + p^2 r^2 (q-1) + p^2 q^2 (r-1) < (pqr)^2.
bool no_overflow_check(const CubeParams& params);

}  // namespace orthopack
