#include "orthopack/constructions.hpp"

#include <algorithm>
#include <limits>

#include "orthopack/cube.hpp"
#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

SymbolicReal alpha() { return SymbolicReal(alpha_id()); }
SymbolicReal beta() { return SymbolicReal(beta_id()); }
SymbolicReal gamma() { return SymbolicReal(gamma_id()); }

Vector zeros(int dim) { return Vector::zero(dim); }

Vector extend_with_zeros(const Vector& v, int extra) {
  std::vector<SymbolicReal> coords(v.begin(), v.end());
  coords.resize(coords.size() + static_cast<std::size_t>(extra), SymbolicReal(0));
  return Vector(std::move(coords));
}

bool all_integer(const Vector& v) {
  for (const SymbolicReal& c : v)
    if (!c.is_integer()) return false;
  return true;
}

Family wrap_product(Family a, Family b) {
  return Family{ProductFamily{std::make_shared<const Family>(std::move(a)),
                              std::make_shared<const Family>(std::move(b))}};
}

// Distributive product of two single families. Pairs whose product is again
// expressible as one variant collapse; everything else stays a ProductFamily.
Family combine(const Family& fa, const Family& fb) {
  const int ld = fa.dimension();
  const auto* pa = std::get_if<PointFamily>(&fa.node);
  const auto* pb = std::get_if<PointFamily>(&fb.node);
  const auto* la = std::get_if<LineFamily>(&fa.node);
  const auto* lb = std::get_if<LineFamily>(&fb.node);
  const auto* qa = std::get_if<PlaneFamily>(&fa.node);
  const auto* qb = std::get_if<PlaneFamily>(&fb.node);
  const auto* ua = std::get_if<PuncturedLattice>(&fa.node);
  const auto* ub = std::get_if<PuncturedLattice>(&fb.node);
  const auto* ta = std::get_if<TranslatedLattice>(&fa.node);
  const auto* tb = std::get_if<TranslatedLattice>(&fb.node);

  if (pa && pb) return Family{PointFamily{pa->base.concat(pb->base)}};
  if (pa && lb) return Family{LineFamily{pa->base.concat(lb->base), lb->axis + ld}};
  if (la && pb) return Family{LineFamily{la->base.concat(pb->base), la->axis}};
  if (pa && qb)
    return Family{PlaneFamily{pa->base.concat(qb->base), qb->axis_plus + ld, qb->axis_minus + ld}};
  if (qa && pb)
    return Family{PlaneFamily{qa->base.concat(pb->base), qa->axis_plus, qa->axis_minus}};
  if (la && lb)
    return Family{PlaneFamily{la->base.concat(lb->base), la->axis, lb->axis + ld}};
  if (ta && tb) return Family{TranslatedLattice{ta->base.concat(tb->base)}};
  if (ua && ub) {
    PuncturedLattice merged{ua->dim + ub->dim, ua->punctured};
    for (int j : ub->punctured) merged.punctured.push_back(j + ld);
    return Family{merged};
  }
  if (ua && tb && all_integer(tb->base)) return Family{PuncturedLattice{ld + tb->base.dim(), ua->punctured}};
  if (ta && ub && all_integer(ta->base)) {
    PuncturedLattice merged{ld + ub->dim, {}};
    for (int j : ub->punctured) merged.punctured.push_back(j + ld);
    return Family{merged};
  }
  return wrap_product(fa, fb);
}

}  // namespace

SymbolId alpha_id() { return SymbolId{"alpha"}; }
SymbolId beta_id() { return SymbolId{"beta"}; }
SymbolId gamma_id() { return SymbolId{"gamma"}; }

FamilySet thick3d() {
  FamilySet fs;
  fs.dimension = 3;
  fs.families.push_back(Family{LineFamily{Vector({SymbolicReal(0), beta(), gamma()}), 1}});
  fs.families.push_back(Family{LineFamily{Vector({alpha(), SymbolicReal(0), gamma()}), 2}});
  fs.families.push_back(Family{LineFamily{Vector({alpha(), beta(), SymbolicReal(0)}), 0}});
  fs.families.push_back(Family{PuncturedLattice{3, {0, 1, 2}}});
  return fs;
}

FamilySet thin3d() {
  FamilySet fs;
  fs.dimension = 3;
  fs.families.push_back(Family{PointFamily{zeros(3)}});
  fs.families.push_back(Family{PlaneFamily{Vector({SymbolicReal(0), beta(), gamma()}), 0, 1}});
  fs.families.push_back(Family{PlaneFamily{Vector({alpha(), SymbolicReal(0), gamma()}), 1, 2}});
  fs.families.push_back(Family{PlaneFamily{Vector({alpha(), beta(), SymbolicReal(0)}), 2, 0}});
  return fs;
}

FamilySet lift(const FamilySet& base, int extra) {
  if (extra < 1) throw ValidationError("lift: the number of added coordinates must be positive");
  FamilySet out;
  out.dimension = base.dimension + extra;
  const Family zero_tail{PointFamily{zeros(extra)}};
  for (const Family& f : base.families) {
    if (const auto* p = std::get_if<PointFamily>(&f.node)) {
      out.families.push_back(Family{PointFamily{extend_with_zeros(p->base, extra)}});
    } else if (const auto* l = std::get_if<LineFamily>(&f.node)) {
      out.families.push_back(Family{LineFamily{extend_with_zeros(l->base, extra), l->axis}});
    } else if (const auto* q = std::get_if<PlaneFamily>(&f.node)) {
      out.families.push_back(
          Family{PlaneFamily{extend_with_zeros(q->base, extra), q->axis_plus, q->axis_minus}});
    } else {
      out.families.push_back(wrap_product(f, zero_tail));
    }
  }
  out.families.push_back(Family{HalfPunctured{base.dimension, extra}});
  return out;
}

FamilySet product(const FamilySet& a, const FamilySet& b) {
  FamilySet out;
  out.dimension = a.dimension + b.dimension;
  for (const Family& fa : a.families)
    for (const Family& fb : b.families) out.families.push_back(combine(fa, fb));
  return out;
}

FamilySet integer_lattice(int dim) {
  FamilySet fs;
  fs.dimension = dim;
  fs.families.push_back(Family{TranslatedLattice{zeros(dim)}});
  return fs;
}

FamilySet empty_set(int dim) {
  FamilySet fs;
  fs.dimension = dim;
  return fs;
}

FamilySet singleton_origin(int dim) {
  FamilySet fs;
  fs.dimension = dim;
  fs.families.push_back(Family{PointFamily{zeros(dim)}});
  return fs;
}

std::vector<Vector> one_dim_packing_example(int count) {
  if (count < 1) throw ValidationError("one_dim_packing_example: count must be positive");
  std::vector<Vector> pts;
  for (int n = count; n >= 1; --n)
    pts.push_back(Vector({SymbolicReal(make_rational(-(4 * static_cast<std::int64_t>(n) - 1), 4))}));
  for (int n = 1; n <= count; ++n)
    pts.push_back(Vector({SymbolicReal(make_rational(4 * static_cast<std::int64_t>(n) - 1, 4))}));
  return pts;
}

namespace {

bool to_int64(const SymbolicReal& x, std::int64_t& out) {
  if (!x.is_integer()) return false;
  const BigInt num = boost::multiprecision::numerator(x.rational_part());
  if (num < std::numeric_limits<std::int64_t>::min() ||
      num > std::numeric_limits<std::int64_t>::max())
    throw BoundExceeded("embed_square: column index does not fit in 64 bits");
  out = num.convert_to<std::int64_t>();
  return true;
}

}  // namespace

bool SquareSpectrum::contains(const Vector& v) const {
  if (v.dim() != 2) throw DimensionMismatch("SquareSpectrum::contains expects dimension 2");
  const Vector u = v - origin;
  const int other = 1 - axis;
  std::int64_t n = 0;
  if (!to_int64(u[axis], n)) return false;
  auto it = offsets.find(n);
  const SymbolicReal t = (it == offsets.end()) ? SymbolicReal(0) : it->second;
  return (u[other] - t).is_integer();
}

SquareSpectrum embed_square(const std::vector<Vector>& pts) {
  for (const Vector& p : pts)
    if (p.dim() != 2) throw DimensionMismatch("embed_square expects dimension 2");
  Certificate cert = pairwise_orthogonal(pts);
  if (cert.verdict != Verdict::Pass)
    throw NotOrthogonal("embed_square: input exponentials are not pairwise orthogonal");

  SquareSpectrum s;
  s.origin = Vector::zero(2);
  if (pts.empty()) return s;
  s.origin = pts.front();

  for (int axis : {0, 1}) {
    bool ok = true;
    for (const Vector& p : pts) {
      if (!(p[axis] - s.origin[axis]).is_integer()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    s.axis = axis;
    const int other = 1 - axis;
    for (const Vector& p : pts) {
      const Vector u = p - s.origin;
      std::int64_t n = 0;
      to_int64(u[axis], n);
      const SymbolicReal t = u[other].reduced_mod_one();
      auto [it, inserted] = s.offsets.emplace(n, t);
      if (!inserted && !(it->second == t))
        throw std::logic_error("embed_square: inconsistent offsets within one column");
    }
    return s;
  }
  // Unreachable for orthogonal inputs: differences all lie in Z x R or R x Z.
  throw std::logic_error("embed_square: no integer axis found for an orthogonal set");
}

}  // namespace orthopack
