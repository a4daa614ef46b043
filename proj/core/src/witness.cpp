#include "orthopack/witness.hpp"

namespace orthopack {

WitnessSpec parse_witness_preset(std::string_view name) {
  if (name.substr(0, 4) != "sqrt")
    throw ValidationError("unknown witness preset: " + std::string(name));
  std::string_view rest = name.substr(4);
  std::string_view rad = rest, div;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    rad = rest.substr(0, slash);
    div = rest.substr(slash + 1);
  }
  auto parse_pos = [&](std::string_view t) -> BigInt {
    if (t.empty()) throw ValidationError("bad witness preset: " + std::string(name));
    for (char ch : t)
      if (ch < '0' || ch > '9')
        throw ValidationError("bad witness preset: " + std::string(name));
    return BigInt(std::string(t));
  };
  WitnessSpec spec;
  spec.radicand = parse_pos(rad);
  spec.divisor = div.empty() ? BigInt(1) : parse_pos(div);
  spec.preset = std::string(name);
  if (spec.radicand < 2 || spec.divisor < 1)
    throw ValidationError("bad witness preset: " + std::string(name));
  BigInt root = sqrt(spec.radicand);
  if (root * root == spec.radicand)
    throw ValidationError("witness radicand is a perfect square: " + std::string(name));
  return spec;
}

SymbolWitness SymbolWitness::defaults() {
  SymbolWitness w;
  w.assign(SymbolId{"alpha"}, parse_witness_preset("sqrt2/2"));
  w.assign(SymbolId{"beta"}, parse_witness_preset("sqrt3/3"));
  w.assign(SymbolId{"gamma"}, parse_witness_preset("sqrt5/5"));
  return w;
}

RationalInterval SymbolWitness::enclosure(const SymbolId& id, unsigned depth) const {
  auto it = values_.find(id);
  if (it == values_.end()) throw UnknownSymbol("no witness for symbol " + id.name);
  const WitnessSpec& spec = it->second;
  // sqrt(m) in [s, s+1]/2^k with s = isqrt(m * 4^k); s+1 is strict since m is
  // not a perfect square.
  BigInt scaled = spec.radicand << (2 * depth);
  BigInt s = sqrt(scaled);
  BigInt pow = BigInt(1) << depth;
  return {make_rational(s, pow * spec.divisor), make_rational(s + 1, pow * spec.divisor)};
}

RationalInterval SymbolWitness::evaluate(const SymbolicReal& x, unsigned depth) const {
  RationalInterval acc = RationalInterval::point(x.rational_part());
  for (const auto& [id, c] : x.symbol_part())
    acc = acc + enclosure(id, depth).scaled(BigInt(c));
  return acc;
}

Ternary compare_abs_lt_one(const SymbolicReal& x, const SymbolWitness& w) {
  if (x.is_rational()) {
    const Rational& q = x.rational_part();
    return (q < 1 && q > -1) ? Ternary::True : Ternary::False;
  }
  for (unsigned depth = 2; depth <= kMaxRefineDepth; ++depth) {
    RationalInterval box = w.evaluate(x, depth);
    if (box.lo > -1 && box.hi < 1) return Ternary::True;
    if (box.lo >= 1 || box.hi <= -1) return Ternary::False;
  }
  return Ternary::Undecidable;
}

Order compare_with_rational(const SymbolicReal& x, const Rational& c, const SymbolWitness& w) {
  if (x.is_rational()) {
    const Rational& q = x.rational_part();
    if (q < c) return Order::Less;
    if (q > c) return Order::Greater;
    return Order::Equal;
  }
  for (unsigned depth = 2; depth <= kMaxRefineDepth; ++depth) {
    RationalInterval box = w.evaluate(x, depth);
    if (box.hi < c) return Order::Less;
    if (box.lo > c) return Order::Greater;
  }
  return Order::Undecidable;
}

}  // namespace orthopack
