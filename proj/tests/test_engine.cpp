#include "orthopack/engine.hpp"

#include <random>

#include "doctest.h"
#include "orthopack/constructions.hpp"
#include "orthopack/cube.hpp"

using namespace orthopack;

namespace {

SymbolicReal sym(const char* n) { return SymbolicReal::symbol(n); }
SymbolicReal rat(std::int64_t p, std::int64_t q) { return SymbolicReal(make_rational(p, q)); }

Candidate pinned3(SymbolicReal a, SymbolicReal b, SymbolicReal c) {
  Candidate cand = Candidate::unconstrained(3);
  cand.coords[0] = PinnedCoord{std::move(a)};
  cand.coords[1] = PinnedCoord{std::move(b)};
  cand.coords[2] = PinnedCoord{std::move(c)};
  return cand;
}

bool in_difference_zero_set(const Vector& d) {
  for (const SymbolicReal& c : d)
    if (c.is_nonzero_integer()) return true;
  return false;
}

// Truncated form of the defining universal constraint: s must be orthogonal to
// every truncated member. For candidates with small integer parts this agrees
// with the exact rule because any violating member has parameters within the
// truncation bound.
bool truncated_constraint(const std::vector<Vector>& members, const Vector& s) {
  for (const Vector& p : members)
    if (!in_difference_zero_set(s - p)) return false;
  return true;
}

Candidate pin_vector(const Vector& s) {
  Candidate cand = Candidate::unconstrained(s.dim());
  for (int j = 0; j < s.dim(); ++j) cand.coords[j] = PinnedCoord{s[j]};
  return cand;
}

void check_fail_with_valid_witness(const FamilySet& fs, int K) {
  MaximalityResult r = is_maximal(fs);
  CHECK(!r.maximal);
  REQUIRE(r.witness.has_value());
  const Vector& w = *r.witness;
  CHECK(!member_of(fs, w));
  for (const Vector& p : truncate(fs, K, K)) CHECK(in_difference_zero_set(w - p));
}

}  // namespace

TEST_CASE("branch lists per family variant") {
  SymbolicReal beta = sym("beta"), gamma = sym("gamma");

  Family line{LineFamily{Vector({SymbolicReal(0), beta, gamma}), 1}};
  auto lb = family_branches(line);
  REQUIRE(lb.size() == 3);
  CHECK(lb[0] == Branch{Atom{AtomKind::PinEqual, 1, beta}});
  CHECK(lb[1] == Branch{Atom{AtomKind::NonzeroIntegerShift, 0, SymbolicReal(0)}});
  CHECK(lb[2] == Branch{Atom{AtomKind::NonzeroIntegerShift, 2, gamma}});

  Family plane{PlaneFamily{Vector({SymbolicReal(0), beta, gamma}), 0, 1}};
  auto pb = family_branches(plane);
  REQUIRE(pb.size() == 3);
  CHECK(pb[0] == Branch{Atom{AtomKind::PinEqual, 0, SymbolicReal(0)}});
  CHECK(pb[1] == Branch{Atom{AtomKind::PinEqual, 1, beta}});
  CHECK(pb[2] == Branch{Atom{AtomKind::NonzeroIntegerShift, 2, gamma}});

  Family pt{PointFamily{Vector::zero(3)}};
  auto ptb = family_branches(pt);
  REQUIRE(ptb.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(ptb[j] == Branch{Atom{AtomKind::NonzeroIntegerShift, j, SymbolicReal(0)}});
  }

  Family punct{PuncturedLattice{3, {0, 1, 2}}};
  auto ub = family_branches(punct);
  REQUIRE(ub.size() == 3);
  for (int j = 0; j < 3; ++j) CHECK(ub[j] == Branch{Atom{AtomKind::PinEqual, j, SymbolicReal(0)}});

  Family half{HalfPunctured{3, 2}};
  auto hb = family_branches(half);
  REQUIRE(hb.size() == 1);
  CHECK(hb[0] == Branch{Atom{AtomKind::PinEqual, 3, SymbolicReal(0)},
                        Atom{AtomKind::PinEqual, 4, SymbolicReal(0)}});

  Family lattice{TranslatedLattice{Vector::zero(3)}};
  CHECK(family_branches(lattice).empty());

  Family bad{PuncturedLattice{2, {0}}};
  CHECK_THROWS_AS(family_branches(bad), UnsupportedFamily);
}

TEST_CASE("product families combine both sides' branches") {
  Family line{LineFamily{Vector({sym("beta")}), 0}};
  Family pt{PointFamily{Vector({rat(1, 2)})}};
  Family prod{ProductFamily{std::make_shared<const Family>(line),
                            std::make_shared<const Family>(pt)}};
  auto b = family_branches(prod);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Branch{Atom{AtomKind::PinEqual, 0, sym("beta")}});
  CHECK(b[1] == Branch{Atom{AtomKind::NonzeroIntegerShift, 1, rat(1, 2)}});
}

TEST_CASE("constraint application against a line pins the free coordinate") {
  SymbolicReal beta = sym("beta"), gamma = sym("gamma");
  Family line{LineFamily{Vector({SymbolicReal(0), beta, gamma}), 1}};
  Candidate cand = Candidate::unconstrained(3);
  cand.coords[0] = PinnedCoord{SymbolicReal(0)};
  cand.coords[2] = PinnedCoord{rat(1, 2)};

  auto refined = family_constraint(line, cand);
  REQUIRE(refined.size() == 1);
  const auto* p = std::get_if<PinnedCoord>(&refined[0].coords[1]);
  REQUIRE(p != nullptr);
  CHECK(p->value == beta);
}

TEST_CASE("constraint application refutes interior rational points") {
  Family punct{PuncturedLattice{3, {0, 1, 2}}};
  CHECK(family_constraint(punct, pinned3(rat(1, 2), rat(1, 2), rat(1, 2))).empty());
  CHECK(family_constraint(punct, pinned3(SymbolicReal(0), rat(1, 2), sym("alpha"))).size() == 1);
}

TEST_CASE("coset domains track excluded representatives") {
  Family pt1{PointFamily{Vector({SymbolicReal(0), SymbolicReal(0)})}};
  Family pt2{PointFamily{Vector({SymbolicReal(5), sym("alpha")})}};
  Candidate cand = Candidate::unconstrained(2);

  auto first = family_constraint(pt1, cand);
  REQUIRE(first.size() == 2);
  const auto* c0 = std::get_if<CosetCoord>(&first[0].coords[0]);
  REQUIRE(c0 != nullptr);
  CHECK(c0->offset == SymbolicReal(0));
  REQUIRE(c0->excluded.size() == 1);
  CHECK(c0->excluded[0] == SymbolicReal(0));

  // Same coordinate, compatible coset: the new representative joins the
  // excluded list. Incompatible cosets refute.
  auto second = family_constraint(pt2, first[0]);
  REQUIRE(second.size() == 2);
  const auto* c1 = std::get_if<CosetCoord>(&second[0].coords[0]);
  REQUIRE(c1 != nullptr);
  CHECK(c1->excluded.size() == 2);

  // A half-integer coset on coordinate 0 is incompatible with the integer
  // representative, so only the coordinate-1 branch survives.
  Candidate off = first[0];
  off.coords[0] = CosetCoord{rat(1, 2), {rat(1, 2)}};
  auto third = family_constraint(pt1, off);
  REQUIRE(third.size() == 1);
  CHECK(std::holds_alternative<CosetCoord>(third[0].coords[1]));
}

TEST_CASE("materialize picks the smallest admissible representative") {
  Candidate cand = Candidate::unconstrained(3);
  cand.coords[0] = PinnedCoord{sym("alpha")};
  cand.coords[1] = CosetCoord{SymbolicReal(0), {SymbolicReal(0), SymbolicReal(1)}};
  Vector w = materialize(cand);
  CHECK(w[0] == sym("alpha"));
  CHECK(w[1] == SymbolicReal(-1));
  CHECK(w[2] == SymbolicReal(0));

  Candidate easy = Candidate::unconstrained(1);
  easy.coords[0] = CosetCoord{sym("gamma"), {sym("gamma") + 5}};
  CHECK(materialize(easy)[0] == sym("gamma"));
}

TEST_CASE("named constructions are maximal") {
  MaximalityResult thick = is_maximal(thick3d());
  CHECK(thick.maximal);
  CHECK(!thick.witness.has_value());
  CHECK(thick.branches_explored > 0);

  CHECK(is_maximal(thin3d()).maximal);
  CHECK(is_maximal(integer_lattice(3)).maximal);
  CHECK(is_maximal(lift(thin3d(), 1)).maximal);
}

TEST_CASE("degenerate sets admit extensions with frozen witnesses") {
  MaximalityResult empty = is_maximal(empty_set(3));
  CHECK(!empty.maximal);
  REQUIRE(empty.witness.has_value());
  CHECK(*empty.witness == Vector::zero(3));

  MaximalityResult single = is_maximal(singleton_origin(3));
  CHECK(!single.maximal);
  REQUIRE(single.witness.has_value());
  CHECK(*single.witness == Vector({SymbolicReal(1), SymbolicReal(0), SymbolicReal(0)}));
}

TEST_CASE("removing any one family breaks maximality with a checkable witness") {
  for (const FamilySet& base : {thick3d(), thin3d()}) {
    for (std::size_t i = 0; i < base.families.size(); ++i) {
      FamilySet mutant = base;
      mutant.families.erase(mutant.families.begin() + static_cast<std::ptrdiff_t>(i));
      check_fail_with_valid_witness(mutant, 6);
    }
  }
}

TEST_CASE("maximality verdicts are deterministic") {
  FamilySet mutant = thin3d();
  mutant.families.erase(mutant.families.begin());
  MaximalityResult a = is_maximal(mutant);
  MaximalityResult b = is_maximal(mutant);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);
  CHECK(a.branches_explored == b.branches_explored);
}

TEST_CASE("branch budget aborts once exhausted") {
  CHECK_THROWS_AS(is_maximal(thick3d(), 5), BranchLimitExceeded);
  try {
    is_maximal(thick3d(), 5);
  } catch (const BranchLimitExceeded& e) {
    CHECK(e.explored >= 5);
  }
  // The same input passes comfortably under the default budget.
  CHECK(is_maximal(thick3d()).maximal);
}

TEST_CASE("exact rules agree with the truncated universal constraint") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> ipick(-4, 4);
  std::uniform_int_distribution<int> spick(0, 3);
  const SymbolicReal tau[4] = {SymbolicReal(0), sym("alpha"), sym("beta"), sym("gamma")};

  std::vector<Family> fams;
  for (const FamilySet& fs : {thick3d(), thin3d(), lift(thin3d(), 1), integer_lattice(3)})
    for (const Family& f : fs.families) fams.push_back(f);

  for (const Family& f : fams) {
    const int d = f.dimension();
    const auto members = truncate(f, 8, 8);
    for (int trial = 0; trial < 250; ++trial) {
      std::vector<SymbolicReal> coords;
      for (int j = 0; j < d; ++j) coords.push_back(tau[spick(rng)] + ipick(rng));
      Vector s{std::move(coords)};
      const bool rule = !family_constraint(f, pin_vector(s)).empty();
      const bool truncated = truncated_constraint(members, s);
      CHECK(rule == truncated);
    }
  }
}

TEST_CASE("exact rules agree on a genuine product family") {
  FamilySet p = product(thin3d(), thin3d());
  const Family* prod = nullptr;
  for (const Family& f : p.families)
    if (f.variant_name() == std::string("product")) {
      prod = &f;
      break;
    }
  REQUIRE(prod != nullptr);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> ipick(-3, 3);
  std::uniform_int_distribution<int> spick(0, 3);
  const SymbolicReal tau[4] = {SymbolicReal(0), sym("alpha"), sym("beta"), sym("gamma")};
  const auto members = truncate(*prod, 6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SymbolicReal> coords;
    for (int j = 0; j < 6; ++j) coords.push_back(tau[spick(rng)] + ipick(rng));
    Vector s{std::move(coords)};
    const bool rule = !family_constraint(*prod, pin_vector(s)).empty();
    const bool truncated = truncated_constraint(members, s);
    CHECK(rule == truncated);
  }
}

TEST_CASE("certificate wrapper classifies outcomes") {
  Certificate pass = verify_maximal(thin3d());
  CHECK(pass.verdict == Verdict::Pass);
  CHECK(pass.check == std::string("maximal"));

  FamilySet mutant = thin3d();
  mutant.families.pop_back();
  Certificate fail = verify_maximal(mutant);
  CHECK(fail.verdict == Verdict::Fail);
  CHECK(!fail.witness.is_null());

  Certificate undec = verify_maximal(thick3d(), 5);
  CHECK(undec.verdict == Verdict::Undecidable);
  CHECK(undec.details.at("reason") == "branch budget exhausted");

  FamilySet unsupported;
  unsupported.dimension = 2;
  unsupported.families.push_back(Family{PuncturedLattice{2, {0}}});
  Certificate u2 = verify_maximal(unsupported);
  CHECK(u2.verdict == Verdict::Undecidable);
}

TEST_CASE("grid search evidence matches engine verdicts on small sets") {
  GridSearchResult none = discretized_extension_search(thin3d(), 2, 8);
  CHECK(!none.extension_found);
  CHECK(none.candidates_checked > 0);

  FamilySet mutant = thin3d();
  mutant.families.erase(mutant.families.begin());  // drop the origin
  GridSearchResult found = discretized_extension_search(mutant, 2, 8);
  CHECK(found.extension_found);
  REQUIRE(found.witness.has_value());
  CHECK(!member_of(mutant, *found.witness));
  for (const Vector& pt : truncate(mutant, 8, 8))
    CHECK(in_difference_zero_set(*found.witness - pt));
}
