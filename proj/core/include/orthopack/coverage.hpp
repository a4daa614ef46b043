#pragma once

#include <vector>

#include "orthopack/interval.hpp"
#include "orthopack/vector.hpp"
#include "orthopack/witness.hpp"

namespace orthopack {

// Axis-aligned box with exact rational sides.
struct RationalBox {
  std::vector<RationalInterval> sides;
};

// Exact volume of a union of boxes, by coordinate-compression sweep
// (elementary intervals on the first axis, recursing on the active boxes).
Rational box_union_volume(const std::vector<RationalBox>& boxes);

// Rigorous enclosure of
//   vol( union of unit cubes centered at S, within slab and [-L, L]^d )
//   / vol( slab within [-L, L]^d ).
// Symbolic coordinates are replaced by witness enclosures; the lower bound
// uses shrunk boxes inside a shrunk region, the upper bound grown boxes inside
// a grown region, so the true fraction always lies inside the result.
RationalInterval slab_coverage_fraction(const std::vector<Vector>& S, const Slab& slab,
                                        int box_halfwidth, const SymbolWitness& w);

}  // namespace orthopack
