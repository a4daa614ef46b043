#include "orthopack/checks.hpp"

#include "doctest.h"
#include "orthopack/constructions.hpp"
#include "orthopack/coverage.hpp"

using namespace orthopack;

namespace {

SymbolicReal rat(std::int64_t p, std::int64_t q) { return SymbolicReal(make_rational(p, q)); }

double to_double(const Rational& q) { return q.convert_to<double>(); }
double mid(const RationalInterval& i) { return (to_double(i.lo) + to_double(i.hi)) / 2.0; }

Slab axis_slab(int axis) { return Slab{axis, rat(-1, 2)}; }

}  // namespace

TEST_CASE("coordinate shifts stay inside the set for lattice-like truncations") {
  CHECK(coordinate_shift_check(truncate(integer_lattice(3), 4, 4), 3).verdict == Verdict::Pass);
  CHECK(coordinate_shift_check(truncate(thin3d(), 5, 5), 3).verdict == Verdict::Pass);
  CHECK(coordinate_shift_check(truncate(thick3d(), 5, 5), 3).verdict == Verdict::Pass);
}

TEST_CASE("a singleton fails the coordinate shift check") {
  Certificate c = coordinate_shift_check({Vector::zero(3)}, 2);
  CHECK(c.verdict == Verdict::Fail);
  REQUIRE(c.witness.is_array());
  // 3 axes, shifts n in {-2,-1,1,2} all missing.
  CHECK(c.witness.size() == 12);
  bool has_n1 = false;
  for (const auto& row : c.witness)
    if (row.at("axis") == 1 && row.at("n") == 1) has_n1 = true;
  CHECK(has_n1);
}

TEST_CASE("slab check passes on truncations of the named constructions") {
  SymbolWitness w = SymbolWitness::defaults();
  CHECK(slab_check(truncate(thick3d(), 5, 5), 5, w).verdict == Verdict::Pass);
  CHECK(slab_check(truncate(integer_lattice(3), 3, 3), 3, w).verdict == Verdict::Pass);
  CHECK(slab_check(truncate(thin3d(), 5, 5), 3, w).verdict == Verdict::Pass);
  CHECK(slab_check(truncate(lift(thin3d(), 1), 4, 4), 3, w).verdict == Verdict::Pass);
}

TEST_CASE("a singleton leaves slabs empty") {
  SymbolWitness w = SymbolWitness::defaults();
  Certificate c = slab_check({Vector::zero(3)}, 2, w);
  CHECK(c.verdict == Verdict::Fail);
  REQUIRE(c.witness.is_array());
  // Per axis the slabs [-2,-1] and [1,2] miss the origin.
  CHECK(c.witness.size() == 6);
  bool has_axis1_offset1 = false;
  for (const auto& row : c.witness)
    if (row.at("axis") == 1 && row.at("offset") == "1") has_axis1_offset1 = true;
  CHECK(has_axis1_offset1);
}

TEST_CASE("coverage fraction is exactly one for the integer lattice slab") {
  SymbolWitness w = SymbolWitness::defaults();
  auto pts = truncate(integer_lattice(3), 3, 3);
  RationalInterval f = slab_coverage_fraction(pts, axis_slab(0), 3, w);
  CHECK(f.lo == 1);
  CHECK(f.hi == 1);
}

TEST_CASE("coverage fraction of a single rational box is exact") {
  // One unit cube in the slab |x_1| <= 1/2 within [-2,2]^2: area 1 out of 4.
  std::vector<Vector> pts{Vector::zero(2)};
  SymbolWitness w = SymbolWitness::defaults();
  RationalInterval f = slab_coverage_fraction(pts, axis_slab(0), 2, w);
  CHECK(f.lo == make_rational(1, 4));
  CHECK(f.hi == make_rational(1, 4));
}

TEST_CASE("coverage fraction encloses the closed form for a shifted box") {
  // Point (alpha, 0): covered x-range [alpha - 1/2, 1/2], so the fraction over
  // the slab within [-1,1]^2 is (1 - alpha)/2.
  std::vector<Vector> pts{Vector({SymbolicReal(alpha_id()), SymbolicReal(0)})};
  SymbolWitness w = SymbolWitness::defaults();
  RationalInterval f = slab_coverage_fraction(pts, axis_slab(0), 1, w);
  RationalInterval a = w.enclosure(alpha_id(), 30);
  const double expect = (1.0 - mid(a)) / 2.0;
  CHECK(to_double(f.width()) < 1e-4);
  CHECK(std::abs(mid(f) - expect) < 1e-4);
}

TEST_CASE("coverage fraction matches the hand-derived value for thin3d") {
  // Boxes meeting the slab |x_1| <= 1/2: the origin cube (volume 1), the
  // second doubly-indexed family (volume (1-alpha)(2L-1)^2) and the k=1 slice
  // of the third (volume alpha(2L-1)), pairwise disjoint; denominator 4L^2.
  SymbolWitness w = SymbolWitness::defaults();
  auto pts = truncate(thin3d(), 3, 3);
  RationalInterval f = slab_coverage_fraction(pts, axis_slab(0), 3, w);
  RationalInterval a = w.enclosure(alpha_id(), 30);
  const double L = 3.0;
  const double expect = (1.0 + (1.0 - mid(a)) * 25.0 + mid(a) * 5.0) / (4 * L * L);
  CHECK(std::abs(mid(f) - expect) < 1e-4);
  CHECK(to_double(f.width()) < 1e-3);
  CHECK(f.hi < make_rational(1, 2));
}

TEST_CASE("coverage fraction matches the hand-derived value for thick3d") {
  SymbolWitness w = SymbolWitness::defaults();
  auto pts = truncate(thick3d(), 5, 5);
  RationalInterval f = slab_coverage_fraction(pts, axis_slab(0), 5, w);
  RationalInterval a = w.enclosure(alpha_id(), 30);
  RationalInterval b = w.enclosure(beta_id(), 30);
  // Line volumes: the first line's boxes run over y in [beta-5.5, beta-0.5]
  // and [beta+0.5, beta+5.5]; since beta > 1/2 only the upper run is clipped
  // at 5, leaving 9.5 - beta. The second line's z-runs clip on both sides
  // (gamma < 1/2), leaving 9(1-alpha); the third contributes its k=1 slice,
  // alpha. The punctured lattice only touches the slab boundary.
  const double expect = (18.5 - mid(b) - 8.0 * mid(a)) / 100.0;
  CHECK(std::abs(mid(f) - expect) < 1e-4);
  CHECK(f.hi < make_rational(1, 5));
}

TEST_CASE("coverage fraction input validation") {
  SymbolWitness w = SymbolWitness::defaults();
  CHECK(slab_coverage_fraction({}, axis_slab(0), 2, w).hi == 0);
  CHECK_THROWS_AS(slab_coverage_fraction({Vector::zero(1)}, axis_slab(0), 2, w), ValidationError);
  CHECK_THROWS_AS(slab_coverage_fraction({Vector::zero(2)}, axis_slab(0), 0, w), ValidationError);
}

TEST_CASE("incompleteness evidence flags the sparse constructions only") {
  SymbolWitness w = SymbolWitness::defaults();
  IncompletenessReport thin = incompleteness_evidence(thin3d(), 5, w);
  CHECK(thin.rows.size() == 9);  // 3 axes x windows {3,4,5}
  CHECK(thin.non_tiling_evidence);
  // The first axis concentrates no plane, so its fraction decays; the other
  // two slabs each contain a full plane of boxes and their fractions grow
  // toward 1 - beta resp. 1 - gamma instead.
  REQUIRE(thin.axis_monotone.size() == 3);
  CHECK(thin.axis_monotone[0]);
  CHECK(!thin.axis_monotone[1]);
  CHECK(!thin.axis_monotone[2]);
  for (const auto& row : thin.rows) CHECK(row.fraction.hi < make_rational(1, 2));

  IncompletenessReport full = incompleteness_evidence(integer_lattice(3), 5, w);
  CHECK(!full.non_tiling_evidence);
  CHECK(!full.axis_monotone[0]);
  for (const auto& row : full.rows) CHECK(row.fraction.contains(1));

  CHECK_THROWS_AS(incompleteness_evidence(integer_lattice(2), 5, w), ValidationError);
}

TEST_CASE("natural cover shapes") {
  auto thin_cover = natural_cover(thin3d());
  REQUIRE(thin_cover.size() == 4);
  CHECK(thin_cover[0].basis.empty());
  CHECK(thin_cover[1].basis.size() == 2);
  CHECK(thin_cover[2].basis.size() == 2);
  CHECK(thin_cover[3].basis.size() == 2);

  auto prod_cover = natural_cover(product(thin3d(), thin3d()));
  REQUIRE(prod_cover.size() == 16);
  std::size_t max_dim = 0;
  for (const auto& s : prod_cover) max_dim = std::max(max_dim, s.basis.size());
  CHECK(max_dim == 4);
}

TEST_CASE("affine cover membership is exact") {
  auto pts = truncate(thin3d(), 4, 4);
  auto cover = natural_cover(thin3d());
  CHECK(affine_cover_check(pts, cover).verdict == Verdict::Pass);

  // Without the last doubly-indexed family's plane, its 64 points are exposed.
  auto partial = cover;
  partial.pop_back();
  Certificate c = affine_cover_check(pts, partial);
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.witness.size() == 64);

  auto lattice_pts = truncate(integer_lattice(3), 2, 2);
  AffineSubspace one_plane{Vector::zero(3),
                           {Vector({SymbolicReal(1), SymbolicReal(0), SymbolicReal(0)}),
                            Vector({SymbolicReal(0), SymbolicReal(1), SymbolicReal(0)})}};
  CHECK(affine_cover_check(lattice_pts, {one_plane}).verdict == Verdict::Fail);

  AffineSubspace bad{Vector::zero(2), {Vector({SymbolicReal(alpha_id()), SymbolicReal(0)})}};
  CHECK_THROWS_AS(affine_cover_check({Vector::zero(2)}, {bad}), ValidationError);
}

TEST_CASE("product truncation is covered by the product cover") {
  FamilySet p = product(thin3d(), thin3d());
  auto pts = truncate(p, 3, 3);
  CHECK(affine_cover_check(pts, natural_cover(p)).verdict == Verdict::Pass);
}

TEST_CASE("two-subgroup dichotomy oracle") {
  Certificate a = lemma_two_subgroups_oracle(6, 6, 200, 1);
  CHECK(a.verdict == Verdict::Pass);
  CHECK(a.details.at("trials") == 200);
  CHECK(a.details.at("subgroups").get<int>() > 2);

  Certificate b = lemma_two_subgroups_oracle(4, 9, 200, 2);
  CHECK(b.verdict == Verdict::Pass);

  CHECK_THROWS_AS(lemma_two_subgroups_oracle(0, 6, 10, 1), ValidationError);
  CHECK_THROWS_AS(lemma_two_subgroups_oracle(6, 6, 0, 1), ValidationError);
}
