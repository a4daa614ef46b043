#include "orthopack/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "orthopack/coverage.hpp"
#include "orthopack/errors.hpp"
#include "orthopack/json_io.hpp"

namespace orthopack {

namespace {

long long to_ll(const BigInt& n) { return n.convert_to<long long>(); }

void require_common_dimension(const std::vector<Vector>& S, int d) {
  for (const Vector& p : S)
    if (p.dim() != d) throw DimensionMismatch("point set mixes dimensions");
}

}  // namespace

Certificate coordinate_shift_check(const std::vector<Vector>& S, int window) {
  static const char* kCheck = "coordinate_shift";
  if (window < 1) throw ValidationError("shift window must be at least 1");
  if (S.empty()) return Certificate::pass(kCheck, {{"points", 0}, {"window", window}});
  const int d = S.front().dim();
  require_common_dimension(S, d);

  std::vector<std::set<SymbolicReal>> seen(d);
  for (const Vector& p : S)
    for (int j = 0; j < d; ++j) seen[j].insert(p[j]);

  json missing = json::array();
  std::uint64_t comparisons = 0;
  const Rational W(window);
  for (const Vector& p : S) {
    for (int j = 0; j < d; ++j) {
      const Rational& r = p[j].rational_part();
      const long long n_min = to_ll(-rational_floor(W + r));
      const long long n_max = to_ll(rational_floor(W - r));
      for (long long n = n_min; n <= n_max; ++n) {
        if (n == 0) continue;
        ++comparisons;
        if (!seen[j].count(p[j] + SymbolicReal(Rational(n))))
          missing.push_back({{"point", p}, {"axis", j + 1}, {"n", n}});
      }
    }
  }
  json details{{"points", S.size()}, {"window", window}, {"comparisons", comparisons}};
  if (missing.empty()) return Certificate::pass(kCheck, std::move(details));
  return Certificate::fail(kCheck, std::move(missing), std::move(details));
}

Certificate slab_check(const std::vector<Vector>& S, int window, const SymbolWitness& w) {
  static const char* kCheck = "slab";
  if (window < 1) throw ValidationError("slab window must be at least 1");
  if (S.empty()) throw ValidationError("slab check needs a nonempty set");
  const int d = S.front().dim();
  require_common_dimension(S, d);

  json empty_slabs = json::array();
  json undecided_slabs = json::array();
  for (int j = 0; j < d; ++j) {
    for (int a = -window; a < window; ++a) {
      bool found = false;
      bool undecided = false;
      const Rational lo(a);
      const Rational hi(a + 1);
      for (const Vector& p : S) {
        const Order against_lo = compare_with_rational(p[j], lo, w);
        if (against_lo == Order::Less) continue;
        if (against_lo == Order::Undecidable) {
          undecided = true;
          continue;
        }
        const Order against_hi = compare_with_rational(p[j], hi, w);
        if (against_hi == Order::Greater) continue;
        if (against_hi == Order::Undecidable) {
          undecided = true;
          continue;
        }
        found = true;
        break;
      }
      if (found) continue;
      json row{{"axis", j + 1}, {"offset", std::to_string(a)}};
      if (undecided)
        undecided_slabs.push_back(std::move(row));
      else
        empty_slabs.push_back(std::move(row));
    }
  }
  json details{{"points", S.size()}, {"window", window}};
  if (!empty_slabs.empty()) return Certificate::fail(kCheck, std::move(empty_slabs), std::move(details));
  if (!undecided_slabs.empty()) {
    details["undecided"] = std::move(undecided_slabs);
    return Certificate::undecidable(kCheck, std::move(details));
  }
  return Certificate::pass(kCheck, std::move(details));
}

IncompletenessReport incompleteness_evidence(const FamilySet& fs, int max_window,
                                             const SymbolWitness& w) {
  if (fs.dimension != 3)
    throw ValidationError("incompleteness evidence is implemented for dimension 3 only");
  if (max_window < 3) throw ValidationError("max window must be at least 3");

  std::map<int, std::vector<Vector>> truncations;
  for (int W = 3; W <= max_window; ++W) truncations[W] = truncate(fs, W, W);

  IncompletenessReport rep;
  rep.non_tiling_evidence = true;
  rep.axis_monotone.assign(3, true);
  const Rational near_one = 1 - make_rational(1, 1000000);
  const SymbolicReal offset(make_rational(-1, 2));
  for (int axis = 0; axis < 3; ++axis) {
    bool first = true;
    Rational prev_hi;
    for (int W = 3; W <= max_window; ++W) {
      RationalInterval f = slab_coverage_fraction(truncations[W], Slab{axis, offset}, W, w);
      if (f.hi >= near_one) rep.non_tiling_evidence = false;
      if (!first && f.hi >= prev_hi) rep.axis_monotone[axis] = false;
      prev_hi = f.hi;
      first = false;
      rep.rows.push_back({axis, W, std::move(f)});
    }
  }
  return rep;
}

namespace {

// Rational row-echelon span with unit pivots, kept sorted by pivot column.
class RationalSpan {
 public:
  void add(std::vector<Rational> v) {
    reduce(v);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      const Rational pivot = v[j];
      for (Rational& x : v) x /= pivot;
      rows_.emplace_back(j, std::move(v));
      std::sort(rows_.begin(), rows_.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      return;
    }
  }

  bool contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }

 private:
  void reduce(std::vector<Rational>& v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational factor = v[pivot];
      for (std::size_t j = pivot; j < v.size(); ++j) v[j] -= factor * row[j];
    }
  }

  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

// point - origin, split into its rational vector and one integer coefficient
// vector per symbol; membership in a rational span is equivalent to all of
// these lying in the span.
bool span_covers(const RationalSpan& span, const Vector& diff) {
  const int d = diff.dim();
  std::vector<Rational> rational(d);
  std::map<SymbolId, std::vector<Rational>> symbolic;
  for (int j = 0; j < d; ++j) {
    rational[j] = diff[j].rational_part();
    for (const auto& [id, coeff] : diff[j].symbol_part()) {
      auto [it, inserted] = symbolic.try_emplace(id, d);
      it->second[j] = coeff;
    }
  }
  if (!span.contains(std::move(rational))) return false;
  for (auto& [id, vec] : symbolic)
    if (!span.contains(std::move(vec))) return false;
  return true;
}

Vector unit_vector(int d, int axis) {
  Vector v = Vector::zero(d);
  v[axis] = SymbolicReal(1);
  return v;
}

AffineSubspace full_block(Vector point) {
  const int d = point.dim();
  AffineSubspace s{std::move(point), {}};
  for (int j = 0; j < d; ++j) s.basis.push_back(unit_vector(d, j));
  return s;
}

AffineSubspace family_hull(const Family& f) {
  return std::visit(
      [&](const auto& node) -> AffineSubspace {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) {
          return {node.base, {}};
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          return {node.base, {unit_vector(node.base.dim(), node.axis)}};
        } else if constexpr (std::is_same_v<T, PlaneFamily>) {
          const int d = node.base.dim();
          return {node.base, {unit_vector(d, node.axis_plus), unit_vector(d, node.axis_minus)}};
        } else if constexpr (std::is_same_v<T, PuncturedLattice>) {
          return full_block(Vector::zero(node.dim));
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          return full_block(Vector::zero(node.head + node.tail));
        } else if constexpr (std::is_same_v<T, TranslatedLattice>) {
          return full_block(node.base);
        } else {
          static_assert(std::is_same_v<T, ProductFamily>);
          const AffineSubspace left = family_hull(*node.left);
          const AffineSubspace right = family_hull(*node.right);
          const int ld = left.point.dim();
          const int rd = right.point.dim();
          AffineSubspace s{left.point.concat(right.point), {}};
          for (const Vector& v : left.basis) s.basis.push_back(v.concat(Vector::zero(rd)));
          for (const Vector& v : right.basis) s.basis.push_back(Vector::zero(ld).concat(v));
          return s;
        }
      },
      f.node);
}

}  // namespace

Certificate affine_cover_check(const std::vector<Vector>& S,
                               const std::vector<AffineSubspace>& cover) {
  static const char* kCheck = "affine_cover";
  const int d = S.empty() ? (cover.empty() ? 0 : cover.front().point.dim()) : S.front().dim();
  require_common_dimension(S, d);

  std::vector<RationalSpan> spans;
  spans.reserve(cover.size());
  for (const AffineSubspace& sub : cover) {
    if (sub.point.dim() != d) throw DimensionMismatch("cover point dimension disagrees with set");
    RationalSpan span;
    for (const Vector& b : sub.basis) {
      if (b.dim() != d) throw DimensionMismatch("cover basis dimension disagrees with set");
      std::vector<Rational> row(d);
      for (int j = 0; j < d; ++j) {
        if (!b[j].is_rational()) throw ValidationError("cover basis vectors must be rational");
        row[j] = b[j].rational_part();
      }
      span.add(std::move(row));
    }
    spans.push_back(std::move(span));
  }

  json uncovered = json::array();
  for (const Vector& p : S) {
    bool covered = false;
    for (std::size_t i = 0; i < cover.size() && !covered; ++i)
      covered = span_covers(spans[i], p - cover[i].point);
    if (!covered) uncovered.push_back(p);
  }
  json details{{"points", S.size()}, {"subspaces", cover.size()}};
  if (uncovered.empty()) return Certificate::pass(kCheck, std::move(details));
  return Certificate::fail(kCheck, std::move(uncovered), std::move(details));
}

std::vector<AffineSubspace> natural_cover(const FamilySet& fs) {
  std::vector<AffineSubspace> cover;
  cover.reserve(fs.families.size());
  for (const Family& f : fs.families) cover.push_back(family_hull(f));
  return cover;
}

namespace {

struct ProductGroup {
  int n1, n2;
  int size() const { return n1 * n2; }
  int diff(int e, int f) const {
    const int a = ((e / n2 - f / n2) % n1 + n1) % n1;
    const int b = ((e % n2 - f % n2) % n2 + n2) % n2;
    return a * n2 + b;
  }
  int add(int e, int f) const {
    const int a = (e / n2 + f / n2) % n1;
    const int b = (e % n2 + f % n2) % n2;
    return a * n2 + b;
  }
};

// All subgroups generated by at most two elements. For Z_n1 x Z_n2 every
// subgroup has at most two generators, so this enumeration is exhaustive.
std::vector<std::vector<char>> two_generated_subgroups(const ProductGroup& G) {
  const int N = G.size();
  std::set<std::vector<char>> unique;
  for (int g = 0; g < N; ++g) {
    for (int h = g; h < N; ++h) {
      std::vector<char> mask(N, 0);
      std::vector<int> queue{0};
      mask[0] = 1;
      while (!queue.empty()) {
        const int e = queue.back();
        queue.pop_back();
        for (int gen : {g, h}) {
          const int f = G.add(e, gen);
          if (!mask[f]) {
            mask[f] = 1;
            queue.push_back(f);
          }
        }
      }
      unique.insert(std::move(mask));
    }
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

Certificate lemma_two_subgroups_oracle(int n1, int n2, int trials, std::uint64_t seed) {
  static const char* kCheck = "two_subgroup_dichotomy";
  if (n1 < 1 || n2 < 1) throw ValidationError("group orders must be positive");
  if (trials < 1) throw ValidationError("trial count must be positive");
  if (static_cast<long long>(n1) * n2 > 4096) throw ValidationError("group too large for the oracle");

  const ProductGroup G{n1, n2};
  const int N = G.size();
  const std::vector<std::vector<char>> subgroups = two_generated_subgroups(G);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_subgroup(0, subgroups.size() - 1);
  std::uniform_int_distribution<int> pick_element(0, N - 1);

  for (int t = 0; t < trials; ++t) {
    const std::vector<char>& H1 = subgroups[pick_subgroup(rng)];
    const std::vector<char>& H2 = subgroups[pick_subgroup(rng)];

    // Grow X greedily while X - X stays inside H1 union H2.
    std::vector<int> X{pick_element(rng)};
    for (int attempt = 0; attempt < 3 * N; ++attempt) {
      const int e = pick_element(rng);
      bool admissible = true;
      for (int x : X) {
        if (x == e) {
          admissible = false;
          break;
        }
        const int dxe = G.diff(e, x);
        if (!H1[dxe] && !H2[dxe]) {
          admissible = false;
          break;
        }
      }
      if (admissible) X.push_back(e);
    }

    bool inside_first = true, inside_second = true;
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = i + 1; j < X.size(); ++j) {
        const int dij = G.diff(X[i], X[j]);
        inside_first = inside_first && H1[dij];
        inside_second = inside_second && H2[dij];
      }
    }
    if (!inside_first && !inside_second) {
      json witness{{"n1", n1}, {"n2", n2}, {"trial", t}, {"set", X}};
      return Certificate::fail(kCheck, std::move(witness));
    }
  }
  return Certificate::pass(
      kCheck, {{"trials", trials}, {"subgroups", subgroups.size()}, {"n1", n1}, {"n2", n2}});
}

}  // namespace orthopack
