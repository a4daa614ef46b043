#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "orthopack/certificate.hpp"
#include "orthopack/errors.hpp"
#include "orthopack/family.hpp"

namespace orthopack {

// Decision procedure for maximality of a family set: does some point s outside
// the set keep every pairwise difference inside the orthogonality zero set?
// Each family variant contributes an exact finite disjunction of branch
// conditions equivalent to "s is orthogonal to every member"; a depth-first
// search over branch choices either finds a consistent refinement (an
// extension exists) or refutes them all (the set is maximal).

// Per-coordinate domain of an extension candidate.
struct FreeCoord {
  bool operator==(const FreeCoord&) const = default;
};
struct PinnedCoord {
  SymbolicReal value;
  bool operator==(const PinnedCoord&) const = default;
};
// x = offset + k for some integer k, excluding finitely many representatives
// (each congruent to offset mod 1).
struct CosetCoord {
  SymbolicReal offset;                  // canonical: rational part in [0, 1)
  std::vector<SymbolicReal> excluded;   // sorted structurally
  bool operator==(const CosetCoord&) const = default;
};
using CoordDomain = std::variant<FreeCoord, PinnedCoord, CosetCoord>;

struct Candidate {
  std::vector<CoordDomain> coords;
  static Candidate unconstrained(int dim) {
    Candidate c;
    c.coords.assign(static_cast<std::size_t>(dim), FreeCoord{});
    return c;
  }
  bool operator==(const Candidate&) const = default;
};

enum class AtomKind {
  PinEqual,             // s_coord = value
  NonzeroIntegerShift,  // s_coord - value is a nonzero integer
};

struct Atom {
  AtomKind kind;
  int coord;
  SymbolicReal value;
  bool operator==(const Atom&) const = default;
};

// One sufficient condition (a conjunction of atoms) for a candidate to be
// orthogonal to every member of one family.
using Branch = std::vector<Atom>;

// The complete finite disjunction for one family: a candidate satisfies the
// family's universal orthogonality constraint iff it satisfies some branch.
// An empty list means the constraint is unsatisfiable. Throws
// UnsupportedFamily for punctured lattices other than the fully punctured
// three dimensional one.
std::vector<Branch> family_branches(const Family& f);

// Refines the candidate with one atom; nullopt when inconsistent.
std::optional<Candidate> apply_atom(const Candidate& c, const Atom& a);

// All consistent refinements of the candidate through the family's branches,
// in branch order.
std::vector<Candidate> family_constraint(const Family& f, const Candidate& c);

// Deterministic representative of a (never empty) candidate domain: pinned
// values stay, cosets take offset + k for the smallest admissible |k|
// (0, 1, -1, 2, ...), free coordinates become 0.
Vector materialize(const Candidate& c);

struct MaximalityResult {
  bool maximal = false;
  std::optional<Vector> witness;  // valid extension point when not maximal
  std::uint64_t branches_explored = 0;
};

// Decides maximality exactly. Throws BranchLimitExceeded when the search
// applies more than branch_limit branch refinements, and UnsupportedFamily
// when some family has no exact rule.
MaximalityResult is_maximal(const FamilySet& fs, std::uint64_t branch_limit = 1000000);

// Certificate wrapper: Pass/Fail from the exact decision, Undecidable when the
// search ran out of budget or met an unsupported family.
Certificate verify_maximal(const FamilySet& fs, std::uint64_t branch_limit = 1000000);

struct GridSearchResult {
  bool extension_found = false;
  std::optional<Vector> witness;
  std::uint64_t candidates_checked = 0;
};

// Evidence-only discretized search: tries every candidate whose coordinates
// are integer shifts (up to grid_halfwidth) of 0 or one symbol, against the
// truncated set. Finding nothing is evidence for maximality, not proof;
// any found witness is exact for the truncation.
GridSearchResult discretized_extension_search(const FamilySet& fs, int grid_halfwidth = 4,
                                              int truncation = 12);

}  // namespace orthopack
