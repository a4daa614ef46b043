#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "orthopack/rational.hpp"

namespace orthopack {

// Formal symbol standing for a real number that is rationally independent of 1
// and of every other symbol. Identity is the name; ordering is lexicographic.
struct SymbolId {
  std::string name;
  auto operator<=>(const SymbolId&) const = default;
};

// Exact value q + sum(c_i * tau_i) with rational q and nonzero integer
// coefficients c_i on symbols tau_i. Value semantics, immutable operations.
//
// Integrality is decided structurally: a value is an integer exactly when it
// carries no symbols and its rational part has denominator 1. This encodes the
// convention that {1} union symbols is linearly independent over the rationals.
class SymbolicReal {
 public:
  SymbolicReal() = default;
  SymbolicReal(std::int64_t n) : rat_(n) {}
  explicit SymbolicReal(Rational q) : rat_(std::move(q)) {}
  explicit SymbolicReal(const SymbolId& s, std::int64_t coeff = 1) {
    if (coeff != 0) syms_.emplace(s, coeff);
  }

  static SymbolicReal symbol(std::string name, std::int64_t coeff = 1) {
    return SymbolicReal(SymbolId{std::move(name)}, coeff);
  }

  const Rational& rational_part() const { return rat_; }
  const std::map<SymbolId, std::int64_t>& symbol_part() const { return syms_; }

  bool is_rational() const { return syms_.empty(); }
  bool is_zero() const { return syms_.empty() && rat_ == 0; }
  bool is_integer() const { return syms_.empty() && is_integral(rat_); }
  bool is_nonzero_integer() const { return is_integer() && rat_ != 0; }

  SymbolicReal operator+(const SymbolicReal& o) const;
  SymbolicReal operator-(const SymbolicReal& o) const;
  SymbolicReal operator-() const;
  SymbolicReal& operator+=(const SymbolicReal& o) { return *this = *this + o; }
  SymbolicReal& operator-=(const SymbolicReal& o) { return *this = *this - o; }

  bool operator==(const SymbolicReal&) const = default;
  // Structural total order (rational part, then symbol map); used for
  // deterministic sorting, not for numeric comparison.
  std::strong_ordering operator<=>(const SymbolicReal& o) const;

  // Value shifted so the rational part lies in [0, 1); symbols untouched.
  SymbolicReal reduced_mod_one() const;

  std::string str() const;

 private:
  Rational rat_;
  std::map<SymbolId, std::int64_t> syms_;
};

inline SymbolicReal operator+(const SymbolicReal& x, std::int64_t n) {
  return x + SymbolicReal(n);
}
inline SymbolicReal operator-(const SymbolicReal& x, std::int64_t n) {
  return x - SymbolicReal(n);
}

}  // namespace orthopack
