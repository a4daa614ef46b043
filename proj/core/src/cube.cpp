#include "orthopack/cube.hpp"

#include <optional>

#include "orthopack/json_io.hpp"

namespace orthopack {

void Vector::require_same_dim(const Vector& o) const {
  if (c_.size() != o.c_.size())
    throw DimensionMismatch("vectors of dimension " + std::to_string(c_.size()) + " and " +
                            std::to_string(o.c_.size()));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

bool in_zero_set(const Vector& xi) {
  for (const SymbolicReal& x : xi)
    if (x.is_nonzero_integer()) return true;
  return false;
}

bool orthogonal(const Vector& a, const Vector& b) { return in_zero_set(a - b); }

namespace {

// Plain integer image of a vector when every coordinate is a small integer;
// most lattice-heavy sets hit this path, which skips rational arithmetic.
std::optional<std::vector<std::int64_t>> small_integer_coords(const Vector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.dim());
  for (const SymbolicReal& x : v) {
    if (!x.is_integer()) return std::nullopt;
    const BigInt& n = numerator(x.rational_part());
    if (n > 1000000000 || n < -1000000000) return std::nullopt;
    out.push_back(n.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace

Certificate pairwise_orthogonal(const std::vector<Vector>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::optional<std::vector<std::int64_t>>> fast(n);
  for (std::size_t i = 0; i < n; ++i) fast[i] = small_integer_coords(pts[i]);

  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      bool ok;
      if (fast[i] && fast[j]) {
        ok = false;
        const auto& a = *fast[i];
        const auto& b = *fast[j];
        if (a.size() != b.size())
          throw DimensionMismatch("mixed dimensions in point list");
        for (std::size_t k = 0; k < a.size(); ++k)
          if (a[k] != b[k]) { ok = true; break; }
      } else {
        ok = orthogonal(pts[i], pts[j]);
      }
      if (!ok) {
        Certificate c = Certificate::fail("orthogonal", json{{"i", i}, {"j", j}});
        c.witness["difference"] = json(pts[i] - pts[j]);
        c.details["pairs_checked"] = pairs;
        return c;
      }
    }
  }
  Certificate c = Certificate::pass("orthogonal");
  c.details["pairs_checked"] = pairs;
  c.details["points"] = n;
  return c;
}

Certificate is_packing(const std::vector<Vector>& pts, const SymbolWitness& w) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector diff = pts[i] - pts[j];
      // Need some coordinate with |d| >= 1, i.e. not all |d| < 1.
      bool separated = false;
      bool undecided = false;
      for (const SymbolicReal& d : diff) {
        switch (compare_abs_lt_one(d, w)) {
          case Ternary::False: separated = true; break;
          case Ternary::True: break;
          case Ternary::Undecidable: undecided = true; break;
        }
        if (separated) break;
      }
      if (separated) continue;
      if (undecided) {
        Certificate c = Certificate::undecidable(
            "packing", json{{"i", i}, {"j", j}, {"reason", "enclosure refinement exhausted"}});
        return c;
      }
      Certificate c = Certificate::fail("packing", json{{"i", i}, {"j", j}});
      c.witness["difference"] = json(diff);
      return c;
    }
  }
  Certificate c = Certificate::pass("packing");
  c.details["points"] = n;
  return c;
}

}  // namespace orthopack
