#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "orthopack/vector.hpp"

namespace orthopack {

// One infinite family of points described in closed form. A FamilySet is a
// finite union of families; constructions keep the families pairwise disjoint
// as point sets.

struct PointFamily {
  Vector base;
  bool operator==(const PointFamily&) const = default;
};

// { base - k e_axis : k integer, k != 0 }
struct LineFamily {
  Vector base;
  int axis = 0;
  bool operator==(const LineFamily&) const = default;
};

// { base + n e_axis_plus - k e_axis_minus : n, k integer, both nonzero }
struct PlaneFamily {
  Vector base;
  int axis_plus = 0;
  int axis_minus = 1;
  bool operator==(const PlaneFamily&) const = default;
};

// Integer vectors whose coordinates listed in `punctured` are all nonzero.
struct PuncturedLattice {
  int dim = 0;
  std::vector<int> punctured;  // sorted, 0-based
  bool operator==(const PuncturedLattice&) const = default;
};

// Z^head x (Z^tail minus {0}): integer vectors whose last `tail` block is not
// identically zero.
struct HalfPunctured {
  int head = 0;
  int tail = 0;
  bool operator==(const HalfPunctured&) const = default;
};

// base + Z^d, a translate of the full integer lattice.
struct TranslatedLattice {
  Vector base;
  bool operator==(const TranslatedLattice&) const = default;
};

struct Family;

// Cartesian product of two families on consecutive coordinate blocks; used for
// cross-variant products that no single variant expresses.
struct ProductFamily {
  std::shared_ptr<const Family> left;
  std::shared_ptr<const Family> right;
  bool operator==(const ProductFamily& o) const;
};

using FamilyNode = std::variant<PointFamily, LineFamily, PlaneFamily, PuncturedLattice,
                                HalfPunctured, TranslatedLattice, ProductFamily>;

struct Family {
  FamilyNode node;
  int dimension() const;
  const char* variant_name() const;
  bool operator==(const Family&) const = default;
};

struct FamilySet {
  int dimension = 0;
  std::vector<Family> families;
  bool operator==(const FamilySet&) const = default;
};

bool member_of(const Family& f, const Vector& v);
bool member_of(const FamilySet& fs, const Vector& v);

// All family members whose doubly/singly-indexed integer parameters are
// bounded by kmax and whose integer lattice offsets lie in [-window, window]
// coordinatewise. Sorted, deduplicated.
std::vector<Vector> truncate(const Family& f, int window, int kmax);
std::vector<Vector> truncate(const FamilySet& fs, int window, int kmax);

// Collects every symbol appearing in family base points.
std::vector<SymbolId> symbols_of(const FamilySet& fs);

}  // namespace orthopack
