#include "orthopack/coverage.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

// Enclosure refinement depth for replacing symbols by rational intervals.
// Width 2^-24 keeps the per-box volume slack far below every tolerance used
// downstream while the dyadic denominators stay cheap.
constexpr unsigned kEnclosureDepth = 24;

using Side = std::pair<Rational, Rational>;

// Volume of the union of the active boxes restricted to coordinates
// axis..d-1. Splits the current axis at all box endpoints; within one
// elementary interval the active set is constant, so the volume factors.
Rational sweep(const std::vector<const RationalBox*>& active, std::size_t axis, std::size_t d) {
  if (axis + 1 == d) {
    std::vector<Side> runs;
    runs.reserve(active.size());
    for (const RationalBox* b : active) runs.emplace_back(b->sides[axis].lo, b->sides[axis].hi);
    std::sort(runs.begin(), runs.end());
    Rational total = 0;
    Rational cur_lo, cur_hi;
    bool open = false;
    for (const auto& [lo, hi] : runs) {
      if (!open) {
        cur_lo = lo;
        cur_hi = hi;
        open = true;
      } else if (lo <= cur_hi) {
        if (hi > cur_hi) cur_hi = hi;
      } else {
        total += cur_hi - cur_lo;
        cur_lo = lo;
        cur_hi = hi;
      }
    }
    if (open) total += cur_hi - cur_lo;
    return total;
  }
  std::vector<Rational> cuts;
  cuts.reserve(active.size() * 2);
  for (const RationalBox* b : active) {
    cuts.push_back(b->sides[axis].lo);
    cuts.push_back(b->sides[axis].hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Rational total = 0;
  std::vector<const RationalBox*> next;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    next.clear();
    for (const RationalBox* b : active)
      if (b->sides[axis].lo <= cuts[i] && b->sides[axis].hi >= cuts[i + 1]) next.push_back(b);
    if (!next.empty()) total += (cuts[i + 1] - cuts[i]) * sweep(next, axis + 1, d);
  }
  return total;
}

}  // namespace

Rational box_union_volume(const std::vector<RationalBox>& boxes) {
  std::vector<const RationalBox*> live;
  std::size_t d = 0;
  for (const RationalBox& b : boxes) {
    if (b.sides.empty()) throw DimensionMismatch("box union needs dimension at least 1");
    if (d == 0) d = b.sides.size();
    if (b.sides.size() != d) throw DimensionMismatch("box dimensions disagree");
    bool degenerate = false;
    for (const RationalInterval& s : b.sides) degenerate = degenerate || s.lo >= s.hi;
    if (!degenerate) live.push_back(&b);
  }
  if (live.empty()) return Rational(0);
  return sweep(live, 0, d);
}

RationalInterval slab_coverage_fraction(const std::vector<Vector>& S, const Slab& slab,
                                        int box_halfwidth, const SymbolWitness& w) {
  if (S.empty()) return RationalInterval();
  const int d = S.front().dim();
  if (d < 2) throw ValidationError("slab coverage needs dimension at least 2");
  if (box_halfwidth < 1) throw ValidationError("bounding box halfwidth must be at least 1");
  if (slab.axis < 0 || slab.axis >= d) throw ValidationError("slab axis out of range");
  for (const Vector& p : S)
    if (p.dim() != d) throw DimensionMismatch("slab coverage points must share a dimension");

  const Rational half = make_rational(1, 2);
  const Rational L(box_halfwidth);
  const RationalInterval off = w.evaluate(slab.offset, kEnclosureDepth);

  // Region = slab [offset, offset+1] on its axis, [-L, L] elsewhere. The outer
  // variant contains the true region for every offset in the enclosure, the
  // inner variant is contained in it; likewise for the unit boxes below. That
  // makes n_lo / denom_hi a certified lower bound and n_hi / denom_lo a
  // certified upper bound on the covered fraction.
  std::vector<Side> outer_region(d, {-L, L});
  std::vector<Side> inner_region(d, {-L, L});
  outer_region[slab.axis] = {off.lo, off.hi + 1};
  inner_region[slab.axis] = {off.hi, off.lo + 1};

  Rational denom_hi = off.width() + 1;
  Rational denom_lo = 1 - off.width();
  for (int j = 0; j < d; ++j) {
    if (j == slab.axis) continue;
    denom_hi *= 2 * L;
    denom_lo *= 2 * L;
  }

  std::vector<RationalBox> outer_boxes, inner_boxes;
  for (const Vector& p : S) {
    RationalBox outer, inner;
    bool outer_ok = true, inner_ok = true;
    for (int j = 0; j < d; ++j) {
      const RationalInterval e = w.evaluate(p[j], kEnclosureDepth);
      const Rational olo = std::max(Rational(e.lo - half), outer_region[j].first);
      const Rational ohi = std::min(Rational(e.hi + half), outer_region[j].second);
      if (olo >= ohi) {
        outer_ok = false;
        break;
      }
      outer.sides.push_back({olo, ohi});
      if (inner_ok) {
        const Rational ilo = std::max(Rational(e.hi - half), inner_region[j].first);
        const Rational ihi = std::min(Rational(e.lo + half), inner_region[j].second);
        if (ilo >= ihi)
          inner_ok = false;
        else
          inner.sides.push_back({ilo, ihi});
      }
    }
    if (!outer_ok) continue;
    outer_boxes.push_back(std::move(outer));
    if (inner_ok) inner_boxes.push_back(std::move(inner));
  }

  const Rational n_hi = box_union_volume(outer_boxes);
  const Rational n_lo = box_union_volume(inner_boxes);
  Rational hi = n_hi / denom_lo;
  if (hi > 1) hi = 1;
  return {n_lo / denom_hi, hi};
}

}  // namespace orthopack
