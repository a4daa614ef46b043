#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "orthopack/symbolic.hpp"

namespace orthopack {

// Point of R^d with exact symbolic coordinates.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<SymbolicReal> coords) : c_(std::move(coords)) {}
  static Vector zero(int dim) { return Vector(std::vector<SymbolicReal>(dim)); }

  int dim() const { return static_cast<int>(c_.size()); }
  const SymbolicReal& operator[](int i) const { return c_[i]; }
  SymbolicReal& operator[](int i) { return c_[i]; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Vector operator-(const Vector& o) const {
    require_same_dim(o);
    std::vector<SymbolicReal> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return Vector(std::move(r));
  }
  Vector operator+(const Vector& o) const {
    require_same_dim(o);
    std::vector<SymbolicReal> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return Vector(std::move(r));
  }

  // Concatenation, for product constructions.
  Vector concat(const Vector& o) const {
    std::vector<SymbolicReal> r = c_;
    r.insert(r.end(), o.c_.begin(), o.c_.end());
    return Vector(std::move(r));
  }

  bool operator==(const Vector&) const = default;
  std::strong_ordering operator<=>(const Vector& o) const {
    if (auto c = c_.size() <=> o.c_.size(); c != 0) return c;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  void require_same_dim(const Vector& o) const;
  std::vector<SymbolicReal> c_;
};

// Axis-aligned width-1 slab: offset <= x_axis <= offset + 1. Axis is 0-based
// in code; serialized forms use 1-based axes.
struct Slab {
  int axis = 0;
  SymbolicReal offset;
};

}  // namespace orthopack
