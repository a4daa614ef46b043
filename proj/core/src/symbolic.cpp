#include "orthopack/symbolic.hpp"

#include <sstream>

namespace orthopack {

std::string rational_repr(const Rational& q) {
  std::ostringstream out;
  out << numerator(q) << "/" << denominator(q);
  return out.str();
}

Rational parse_rational(std::string_view s) {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw ValidationError("empty integer literal");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw ValidationError("bare sign in integer literal");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw ValidationError("bad integer literal: " + std::string(t));
    return BigInt(std::string(t));
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  return make_rational(num, den);
}

SymbolicReal SymbolicReal::operator+(const SymbolicReal& o) const {
  SymbolicReal r;
  r.rat_ = rat_ + o.rat_;
  r.syms_ = syms_;
  for (const auto& [id, c] : o.syms_) {
    auto it = r.syms_.find(id);
    if (it == r.syms_.end()) {
      r.syms_.emplace(id, c);
    } else {
      it->second += c;
      if (it->second == 0) r.syms_.erase(it);
    }
  }
  return r;
}

SymbolicReal SymbolicReal::operator-() const {
  SymbolicReal r;
  r.rat_ = -rat_;
  for (const auto& [id, c] : syms_) r.syms_.emplace(id, -c);
  return r;
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& o) const { return *this + (-o); }

std::strong_ordering SymbolicReal::operator<=>(const SymbolicReal& o) const {
  if (rat_ < o.rat_) return std::strong_ordering::less;
  if (o.rat_ < rat_) return std::strong_ordering::greater;
  if (auto c = syms_.size() <=> o.syms_.size(); c != 0) return c;
  auto it = syms_.begin(), jt = o.syms_.begin();
  for (; it != syms_.end(); ++it, ++jt) {
    if (auto c = it->first <=> jt->first; c != 0) return c;
    if (auto c = it->second <=> jt->second; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

SymbolicReal SymbolicReal::reduced_mod_one() const {
  SymbolicReal r = *this;
  r.rat_ -= Rational(rational_floor(rat_));
  return r;
}

std::string SymbolicReal::str() const {
  std::ostringstream out;
  bool wrote = false;
  if (syms_.empty() || rat_ != 0) {
    out << rat_;
    wrote = true;
  }
  for (const auto& [id, c] : syms_) {
    if (c > 0 && wrote) out << "+";
    if (c == -1)
      out << "-";
    else if (c != 1)
      out << c << "*";
    out << id.name;
    wrote = true;
  }
  return out.str();
}

}  // namespace orthopack
