#pragma once

#include <map>
#include <string>
#include <string_view>

#include "orthopack/interval.hpp"
#include "orthopack/symbolic.hpp"

namespace orthopack {

// Named irrational witness value sqrt(radicand)/divisor. Radicands must not be
// perfect squares, so every witness value is irrational and in particular never
// an integer, keeping witnesses consistent with the structural integrality rule.
struct WitnessSpec {
  BigInt radicand;
  BigInt divisor;
  std::string preset;  // the name it was parsed from, e.g. "sqrt2/2"

  bool operator==(const WitnessSpec&) const = default;
};

// Accepts "sqrt<m>" or "sqrt<m>/<d>"; rejects perfect-square radicands.
WitnessSpec parse_witness_preset(std::string_view name);

enum class Ternary { False, True, Undecidable };
enum class Order { Less, Equal, Greater, Undecidable };

// Refinement stops after this many halvings of an enclosure.
inline constexpr unsigned kMaxRefineDepth = 64;

// Assignment of interval-refinable values to symbols. enclosure(id, depth)
// returns a closed rational interval of width at most 1/2^depth containing the
// witness value; deeper depths nest inside shallower ones.
class SymbolWitness {
 public:
  static SymbolWitness defaults();  // alpha: sqrt2/2, beta: sqrt3/3, gamma: sqrt5/5

  void assign(const SymbolId& id, WitnessSpec spec) { values_[id] = std::move(spec); }
  bool has(const SymbolId& id) const { return values_.count(id) != 0; }
  const std::map<SymbolId, WitnessSpec>& values() const { return values_; }

  RationalInterval enclosure(const SymbolId& id, unsigned depth) const;
  RationalInterval evaluate(const SymbolicReal& x, unsigned depth) const;

 private:
  std::map<SymbolId, WitnessSpec> values_;
};

// Decides |x| < 1 under the witness, refining until the enclosure separates
// from the boundary; Undecidable after kMaxRefineDepth refinements.
Ternary compare_abs_lt_one(const SymbolicReal& x, const SymbolWitness& w);

// Three-way comparison of x against a rational point. Exact when x is
// rational; otherwise refined until strict separation (equality with a
// rational is impossible for an irrational witness combination).
Order compare_with_rational(const SymbolicReal& x, const Rational& c, const SymbolWitness& w);

}  // namespace orthopack
