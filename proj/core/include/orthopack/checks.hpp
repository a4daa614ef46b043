#pragma once

#include <cstdint>
#include <vector>

#include "orthopack/certificate.hpp"
#include "orthopack/family.hpp"
#include "orthopack/interval.hpp"
#include "orthopack/vector.hpp"
#include "orthopack/witness.hpp"

namespace orthopack {

// For every point, axis and integer shift n != 0 that keeps the shifted
// coordinate's rational part within [-window, window], the shifted coordinate
// must occur again in the set on that axis. Fail witness rows:
// {"point": ..., "axis": 1-based, "n": shift}.
Certificate coordinate_shift_check(const std::vector<Vector>& S, int window);

// Every axis-aligned unit slab [a, a+1] with integer a in [-window, window)
// must contain a point of the set. Fail witness rows:
// {"axis": 1-based, "offset": "a"}.
Certificate slab_check(const std::vector<Vector>& S, int window, const SymbolWitness& w);

struct SlabCoverageRow {
  int axis = 0;  // 0-based
  int window = 0;
  RationalInterval fraction;
};

// Certified slab coverage fractions for the unit slabs |x_axis| <= 1/2 over a
// growing sequence of truncations, plus the derived flags. Monotonicity is
// reported per axis: depending on where the construction concentrates its
// mass, some slab fractions approach their limit from above and others from
// below.
struct IncompletenessReport {
  std::vector<SlabCoverageRow> rows;
  bool non_tiling_evidence = false;  // every upper bound < 1 - 10^-6
  std::vector<bool> axis_monotone;   // per axis: upper bounds strictly decrease in W
};

// Rows for each axis and window W in {3, ..., max_window}, using the
// truncation with kmax = window = W and bounding box halfwidth W.
// Three-dimensional sets only.
IncompletenessReport incompleteness_evidence(const FamilySet& fs, int max_window,
                                             const SymbolWitness& w);

// point + span of basis; basis vectors must have rational coordinates.
struct AffineSubspace {
  Vector point;
  std::vector<Vector> basis;
};

// Passes when every point of S lies in at least one subspace of the cover.
// Membership is exact: the rational part and each symbol coefficient vector
// of point - subspace.point must lie in the rational span of the basis.
Certificate affine_cover_check(const std::vector<Vector>& S,
                               const std::vector<AffineSubspace>& cover);

// One affine subspace per family: the affine hull of its parameter set
// (a point, a line, a plane, or a full coordinate block; products concatenate).
std::vector<AffineSubspace> natural_cover(const FamilySet& fs);

// Randomized check of the two-subgroup dichotomy in Z_n1 x Z_n2: grow a random
// set X whose difference set stays inside H1 union H2 for random subgroups
// H1, H2, then verify the difference set lies inside one of the two.
Certificate lemma_two_subgroups_oracle(int n1, int n2, int trials, std::uint64_t seed);

}  // namespace orthopack
