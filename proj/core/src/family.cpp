#include "orthopack/family.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

// Applies fn to every integer vector of the given length with entries in
// [-window, window], in lexicographic order.
void for_each_offset(int length, int window,
                     const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> z(static_cast<std::size_t>(length), -window);
  if (length == 0) {
    fn(z);
    return;
  }
  for (;;) {
    fn(z);
    int i = length - 1;
    while (i >= 0 && z[static_cast<std::size_t>(i)] == window) {
      z[static_cast<std::size_t>(i)] = -window;
      --i;
    }
    if (i < 0) return;
    ++z[static_cast<std::size_t>(i)];
  }
}

Vector shifted(const Vector& base, int axis, std::int64_t k) {
  std::vector<SymbolicReal> coords(base.begin(), base.end());
  coords[static_cast<std::size_t>(axis)] = coords[static_cast<std::size_t>(axis)] + k;
  return Vector(std::move(coords));
}

Vector integer_vector(const std::vector<std::int64_t>& z) {
  std::vector<SymbolicReal> coords;
  coords.reserve(z.size());
  for (std::int64_t c : z) coords.emplace_back(c);
  return Vector(std::move(coords));
}

void collect_symbols(const SymbolicReal& x, std::set<SymbolId>& out) {
  for (const auto& [id, coeff] : x.symbol_part()) out.insert(id);
}

void collect_symbols(const Family& f, std::set<SymbolId>& out) {
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily> || std::is_same_v<T, LineFamily> ||
                      std::is_same_v<T, PlaneFamily> || std::is_same_v<T, TranslatedLattice>) {
          for (const SymbolicReal& c : node.base) collect_symbols(c, out);
        } else if constexpr (std::is_same_v<T, ProductFamily>) {
          collect_symbols(*node.left, out);
          collect_symbols(*node.right, out);
        }
      },
      f.node);
}

}  // namespace

bool ProductFamily::operator==(const ProductFamily& o) const {
  return *left == *o.left && *right == *o.right;
}

int Family::dimension() const {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PuncturedLattice>) {
          return node.dim;
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          return node.head + node.tail;
        } else if constexpr (std::is_same_v<T, ProductFamily>) {
          return node.left->dimension() + node.right->dimension();
        } else {
          return node.base.dim();
        }
      },
      node);
}

const char* Family::variant_name() const {
  return std::visit(
      [](const auto& n) -> const char* {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PointFamily>) return "point";
        if constexpr (std::is_same_v<T, LineFamily>) return "line";
        if constexpr (std::is_same_v<T, PlaneFamily>) return "plane";
        if constexpr (std::is_same_v<T, PuncturedLattice>) return "punctured_lattice";
        if constexpr (std::is_same_v<T, HalfPunctured>) return "half_punctured";
        if constexpr (std::is_same_v<T, TranslatedLattice>) return "translated_lattice";
        if constexpr (std::is_same_v<T, ProductFamily>) return "product";
        return "unknown";
      },
      node);
}

bool member_of(const Family& f, const Vector& v) {
  if (v.dim() != f.dimension())
    throw DimensionMismatch("member_of: vector dimension does not match family");
  return std::visit(
      [&v](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) {
          return v == node.base;
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          for (int j = 0; j < v.dim(); ++j) {
            const SymbolicReal d = v[j] - node.base[j];
            if (j == node.axis) {
              if (!d.is_nonzero_integer()) return false;
            } else if (!d.is_zero()) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, PlaneFamily>) {
          for (int j = 0; j < v.dim(); ++j) {
            const SymbolicReal d = v[j] - node.base[j];
            if (j == node.axis_plus || j == node.axis_minus) {
              if (!d.is_nonzero_integer()) return false;
            } else if (!d.is_zero()) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, PuncturedLattice>) {
          for (int j = 0; j < v.dim(); ++j)
            if (!v[j].is_integer()) return false;
          for (int j : node.punctured)
            if (v[j].is_zero()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          for (int j = 0; j < v.dim(); ++j)
            if (!v[j].is_integer()) return false;
          // Tail block must not vanish identically.
          for (int j = node.head; j < node.head + node.tail; ++j)
            if (!v[j].is_zero()) return true;
          return false;
        } else if constexpr (std::is_same_v<T, TranslatedLattice>) {
          for (int j = 0; j < v.dim(); ++j)
            if (!(v[j] - node.base[j]).is_integer()) return false;
          return true;
        } else {
          const int ld = node.left->dimension();
          std::vector<SymbolicReal> lc(v.begin(), v.begin() + ld);
          std::vector<SymbolicReal> rc(v.begin() + ld, v.end());
          return member_of(*node.left, Vector(std::move(lc))) &&
                 member_of(*node.right, Vector(std::move(rc)));
        }
      },
      f.node);
}

bool member_of(const FamilySet& fs, const Vector& v) {
  if (v.dim() != fs.dimension)
    throw DimensionMismatch("member_of: vector dimension does not match family set");
  for (const Family& f : fs.families)
    if (member_of(f, v)) return true;
  return false;
}

std::vector<Vector> truncate(const Family& f, int window, int kmax) {
  if (window < 0 || kmax < 0) throw ValidationError("truncate: bounds must be nonnegative");
  std::vector<Vector> out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) {
          out.push_back(node.base);
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          for (std::int64_t k = -kmax; k <= kmax; ++k) {
            if (k == 0) continue;
            out.push_back(shifted(node.base, node.axis, k));
          }
        } else if constexpr (std::is_same_v<T, PlaneFamily>) {
          for (std::int64_t n = -kmax; n <= kmax; ++n) {
            if (n == 0) continue;
            for (std::int64_t k = -kmax; k <= kmax; ++k) {
              if (k == 0) continue;
              out.push_back(shifted(shifted(node.base, node.axis_plus, n), node.axis_minus, k));
            }
          }
        } else if constexpr (std::is_same_v<T, PuncturedLattice>) {
          for_each_offset(node.dim, window, [&](const std::vector<std::int64_t>& z) {
            for (int j : node.punctured)
              if (z[static_cast<std::size_t>(j)] == 0) return;
            out.push_back(integer_vector(z));
          });
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          for_each_offset(node.head + node.tail, window, [&](const std::vector<std::int64_t>& z) {
            bool tail_zero = true;
            for (int j = node.head; j < node.head + node.tail; ++j)
              if (z[static_cast<std::size_t>(j)] != 0) tail_zero = false;
            if (!tail_zero) out.push_back(integer_vector(z));
          });
        } else if constexpr (std::is_same_v<T, TranslatedLattice>) {
          for_each_offset(node.base.dim(), window, [&](const std::vector<std::int64_t>& z) {
            std::vector<SymbolicReal> coords(node.base.begin(), node.base.end());
            for (std::size_t j = 0; j < z.size(); ++j) coords[j] = coords[j] + z[j];
            out.push_back(Vector(std::move(coords)));
          });
        } else {
          const auto left = truncate(*node.left, window, kmax);
          const auto right = truncate(*node.right, window, kmax);
          for (const Vector& a : left)
            for (const Vector& b : right) out.push_back(a.concat(b));
        }
      },
      f.node);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vector> truncate(const FamilySet& fs, int window, int kmax) {
  std::vector<Vector> out;
  for (const Family& f : fs.families) {
    auto pts = truncate(f, window, kmax);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SymbolId> symbols_of(const FamilySet& fs) {
  std::set<SymbolId> acc;
  for (const Family& f : fs.families) collect_symbols(f, acc);
  return std::vector<SymbolId>(acc.begin(), acc.end());
}

}  // namespace orthopack
