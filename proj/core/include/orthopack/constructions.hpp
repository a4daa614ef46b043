#pragma once

#include <cstdint>
#include <map>

#include "orthopack/certificate.hpp"
#include "orthopack/family.hpp"

namespace orthopack {

// The three generic translation parameters used by the named constructions.
SymbolId alpha_id();
SymbolId beta_id();
SymbolId gamma_id();

// Maximal orthogonal set for the cube in R^3 containing the full punctured
// lattice: three lines (0, beta - k, gamma), (alpha, 0, gamma - k),
// (alpha - k, beta, 0) plus all integer vectors with every coordinate nonzero.
FamilySet thick3d();

// Maximal orthogonal set in R^3 with only one point per axis slab: the origin
// plus the three doubly-indexed families (n, beta - k, gamma),
// (alpha, n, gamma - k), (alpha - k, beta, n) over nonzero integers n, k.
FamilySet thin3d();

// { (lambda, 0) : lambda in base } union Z^d x (Z^extra minus {0}).
FamilySet lift(const FamilySet& base, int extra);

// Cartesian product, expanded distributively over family pairs. Pairs with a
// closed-form product collapse to a single variant; the rest become
// ProductFamily wrappers.
FamilySet product(const FamilySet& a, const FamilySet& b);

FamilySet integer_lattice(int dim);
FamilySet empty_set(int dim);
FamilySet singleton_origin(int dim);

// 2*count points +-(n - 1/4), n = 1..count: a maximal cube packing on the line
// whose exponentials are not pairwise orthogonal.
std::vector<Vector> one_dim_packing_example(int count);

// Spectrum of the square containing a given finite orthogonal set: after
// translating some point to the origin, all points live on integer columns
// along `axis` with per-column offsets t(n); the full spectrum is
// { (n, k + t(n)) } (coordinates swapped when axis = 1), with t extended by
// zero on columns the input does not constrain.
struct SquareSpectrum {
  int axis = 0;  // 0: first coordinate is the column index, 1: second
  Vector origin;
  std::map<std::int64_t, SymbolicReal> offsets;  // canonical representatives in [0,1)

  bool contains(const Vector& v) const;
};

SquareSpectrum embed_square(const std::vector<Vector>& pts);

}  // namespace orthopack
