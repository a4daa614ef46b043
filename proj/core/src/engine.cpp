#include "orthopack/engine.hpp"

#include <algorithm>
#include <limits>

#include "orthopack/constructions.hpp"
#include "orthopack/json_io.hpp"

namespace orthopack {

namespace {

Atom pin(int coord, SymbolicReal value) { return Atom{AtomKind::PinEqual, coord, std::move(value)}; }
Atom shift(int coord, SymbolicReal value) {
  return Atom{AtomKind::NonzeroIntegerShift, coord, std::move(value)};
}

void append_shifted(std::vector<Branch>& out, const std::vector<Branch>& src, int offset) {
  for (const Branch& b : src) {
    Branch moved;
    moved.reserve(b.size());
    for (const Atom& a : b) moved.push_back(Atom{a.kind, a.coord + offset, a.value});
    out.push_back(std::move(moved));
  }
}

}  // namespace

std::vector<Branch> family_branches(const Family& f) {
  const int d = f.dimension();
  std::vector<Branch> out;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) {
          // Some fixed coordinate difference must be a nonzero integer.
          for (int j = 0; j < d; ++j) out.push_back({shift(j, node.base[j])});
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          // Either the running coordinate matches the base exactly (the
          // parameter itself then provides the nonzero integer), or a fixed
          // coordinate does the job for every member at once.
          out.push_back({pin(node.axis, node.base[node.axis])});
          for (int j = 0; j < d; ++j)
            if (j != node.axis) out.push_back({shift(j, node.base[j])});
        } else if constexpr (std::is_same_v<T, PlaneFamily>) {
          if (node.axis_plus == node.axis_minus)
            throw ValidationError("family_branches: degenerate doubly-indexed family");
          out.push_back({pin(node.axis_plus, node.base[node.axis_plus])});
          out.push_back({pin(node.axis_minus, node.base[node.axis_minus])});
          for (int j = 0; j < d; ++j)
            if (j != node.axis_plus && j != node.axis_minus)
              out.push_back({shift(j, node.base[j])});
        } else if constexpr (std::is_same_v<T, PuncturedLattice>) {
          if (node.dim != 3 || node.punctured != std::vector<int>{0, 1, 2})
            throw UnsupportedFamily(
                "no exact extension rule for this punctured lattice shape");
          // A zero coordinate of the candidate turns every member's nonzero
          // entry into the required nonzero integer difference.
          for (int j = 0; j < d; ++j) out.push_back({pin(j, SymbolicReal(0))});
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          Branch all;
          for (int j = node.head; j < node.head + node.tail; ++j)
            all.push_back(pin(j, SymbolicReal(0)));
          out.push_back(std::move(all));
        } else if constexpr (std::is_same_v<T, TranslatedLattice>) {
          // A full lattice translate admits no orthogonal extension: matching
          // the candidate's integer-shifted coordinates member by member
          // always produces a difference without a nonzero integer entry.
        } else {
          const auto left = family_branches(*node.left);
          const auto right = family_branches(*node.right);
          append_shifted(out, left, 0);
          append_shifted(out, right, node.left->dimension());
        }
      },
      f.node);
  return out;
}

std::optional<Candidate> apply_atom(const Candidate& c, const Atom& a) {
  if (a.coord < 0 || a.coord >= static_cast<int>(c.coords.size()))
    throw DimensionMismatch("apply_atom: coordinate out of range");
  Candidate out = c;
  CoordDomain& dom = out.coords[static_cast<std::size_t>(a.coord)];
  if (a.kind == AtomKind::PinEqual) {
    if (std::holds_alternative<FreeCoord>(dom)) {
      dom = PinnedCoord{a.value};
    } else if (const auto* p = std::get_if<PinnedCoord>(&dom)) {
      if (!(p->value == a.value)) return std::nullopt;
    } else {
      const auto& co = std::get<CosetCoord>(dom);
      if (!(a.value - co.offset).is_integer()) return std::nullopt;
      if (std::binary_search(co.excluded.begin(), co.excluded.end(), a.value))
        return std::nullopt;
      dom = PinnedCoord{a.value};
    }
  } else {
    if (std::holds_alternative<FreeCoord>(dom)) {
      dom = CosetCoord{a.value.reduced_mod_one(), {a.value}};
    } else if (const auto* p = std::get_if<PinnedCoord>(&dom)) {
      if (!(p->value - a.value).is_nonzero_integer()) return std::nullopt;
    } else {
      auto& co = std::get<CosetCoord>(dom);
      if (!(a.value - co.offset).is_integer()) return std::nullopt;
      auto it = std::lower_bound(co.excluded.begin(), co.excluded.end(), a.value);
      if (it == co.excluded.end() || !(*it == a.value)) co.excluded.insert(it, a.value);
    }
  }
  return out;
}

std::vector<Candidate> family_constraint(const Family& f, const Candidate& c) {
  if (f.dimension() != static_cast<int>(c.coords.size()))
    throw DimensionMismatch("family_constraint: candidate dimension mismatch");
  std::vector<Candidate> out;
  for (const Branch& br : family_branches(f)) {
    std::optional<Candidate> refined = c;
    for (const Atom& a : br) {
      refined = apply_atom(*refined, a);
      if (!refined) break;
    }
    if (refined) out.push_back(std::move(*refined));
  }
  return out;
}

Vector materialize(const Candidate& c) {
  std::vector<SymbolicReal> coords;
  coords.reserve(c.coords.size());
  for (const CoordDomain& dom : c.coords) {
    if (std::holds_alternative<FreeCoord>(dom)) {
      coords.emplace_back(0);
    } else if (const auto* p = std::get_if<PinnedCoord>(&dom)) {
      coords.push_back(p->value);
    } else {
      const auto& co = std::get<CosetCoord>(dom);
      for (std::int64_t k = 0;; k = (k > 0) ? -k : -k + 1) {
        SymbolicReal v = co.offset + k;
        if (!std::binary_search(co.excluded.begin(), co.excluded.end(), v)) {
          coords.push_back(std::move(v));
          break;
        }
      }
    }
  }
  return Vector(std::move(coords));
}

namespace {

struct Search {
  const std::vector<std::vector<Branch>>& lists;
  std::uint64_t limit;
  std::uint64_t explored = 0;

  bool run(std::size_t idx, const Candidate& cand, Candidate& found) {
    if (idx == lists.size()) {
      found = cand;
      return true;
    }
    for (const Branch& br : lists[idx]) {
      if (++explored > limit) throw BranchLimitExceeded(explored);
      std::optional<Candidate> next = cand;
      for (const Atom& a : br) {
        next = apply_atom(*next, a);
        if (!next) break;
      }
      if (next && run(idx + 1, *next, found)) return true;
    }
    return false;
  }
};

int family_rank(const Family& f) {
  return std::visit(
      [](const auto& node) -> int {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) return 0;
        if constexpr (std::is_same_v<T, PuncturedLattice> || std::is_same_v<T, HalfPunctured> ||
                      std::is_same_v<T, TranslatedLattice>)
          return 1;
        if constexpr (std::is_same_v<T, ProductFamily>) return 3;
        return 2;
      },
      f.node);
}

}  // namespace

MaximalityResult is_maximal(const FamilySet& fs, std::uint64_t branch_limit) {
  for (const Family& f : fs.families)
    if (f.dimension() != fs.dimension)
      throw DimensionMismatch("is_maximal: family dimension does not match the set");

  // Deterministic order: cheap, strongly-pruning rules first, original index
  // as the tiebreak.
  std::vector<std::size_t> order(fs.families.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family_rank(fs.families[a]) < family_rank(fs.families[b]);
  });

  std::vector<std::vector<Branch>> lists;
  lists.reserve(order.size());
  for (std::size_t i : order) lists.push_back(family_branches(fs.families[i]));

  MaximalityResult res;
  for (const auto& l : lists) {
    if (l.empty()) {
      // Some family's constraint is unsatisfiable outright, so no extension
      // exists.
      res.maximal = true;
      return res;
    }
  }

  Search search{lists, branch_limit};
  Candidate found;
  const bool extension = search.run(0, Candidate::unconstrained(fs.dimension), found);
  res.branches_explored = search.explored;
  res.maximal = !extension;
  if (extension) res.witness = materialize(found);
  return res;
}

Certificate verify_maximal(const FamilySet& fs, std::uint64_t branch_limit) {
  const char* kCheck = "maximal";
  try {
    MaximalityResult r = is_maximal(fs, branch_limit);
    nlohmann::json details{{"branches_explored", r.branches_explored},
                           {"families", fs.families.size()}};
    if (r.maximal) return Certificate::pass(kCheck, std::move(details));
    return Certificate::fail(kCheck, nlohmann::json(*r.witness), std::move(details));
  } catch (const BranchLimitExceeded& e) {
    return Certificate::undecidable(
        kCheck, nlohmann::json{{"reason", "branch budget exhausted"}, {"explored", e.explored}});
  } catch (const UnsupportedFamily& e) {
    return Certificate::undecidable(kCheck,
                                    nlohmann::json{{"reason", std::string(e.what())}});
  }
}

namespace {

// Compact coordinate form for the discretized search: an integer plus at most
// one known symbol with coefficient one.
struct EncodedCoord {
  int sym = -1;  // -1: none, otherwise index into the symbol list
  std::int64_t val = 0;
};

bool encode_coord(const SymbolicReal& x, const std::vector<SymbolId>& syms, EncodedCoord& out) {
  if (!is_integral(x.rational_part())) return false;
  const BigInt num = boost::multiprecision::numerator(x.rational_part());
  if (num < std::numeric_limits<std::int64_t>::min() ||
      num > std::numeric_limits<std::int64_t>::max())
    return false;
  out.val = num.convert_to<std::int64_t>();
  out.sym = -1;
  if (x.symbol_part().empty()) return true;
  if (x.symbol_part().size() != 1) return false;
  const auto& [id, coeff] = *x.symbol_part().begin();
  if (coeff != 1) return false;
  auto it = std::find(syms.begin(), syms.end(), id);
  if (it == syms.end()) return false;
  out.sym = static_cast<int>(it - syms.begin());
  return true;
}

}  // namespace

GridSearchResult discretized_extension_search(const FamilySet& fs, int grid_halfwidth,
                                              int truncation) {
  const int d = fs.dimension;
  const std::vector<SymbolId> syms = symbols_of(fs);
  const std::vector<Vector> members = truncate(fs, truncation, truncation);

  std::vector<std::vector<EncodedCoord>> encoded(members.size());
  bool fast = true;
  for (std::size_t i = 0; i < members.size() && fast; ++i) {
    encoded[i].resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d && fast; ++j)
      fast = encode_coord(members[i][j], syms, encoded[i][static_cast<std::size_t>(j)]);
  }

  // Grid values per coordinate: integer shifts of 0 and of each symbol.
  std::vector<EncodedCoord> values;
  std::vector<SymbolicReal> value_reals;
  for (int s = -1; s < static_cast<int>(syms.size()); ++s) {
    for (std::int64_t n = -grid_halfwidth; n <= grid_halfwidth; ++n) {
      values.push_back(EncodedCoord{s, n});
      SymbolicReal base = (s < 0) ? SymbolicReal(0) : SymbolicReal(syms[static_cast<std::size_t>(s)]);
      value_reals.push_back(base + n);
    }
  }

  GridSearchResult res;
  if (d == 0) return res;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  for (;;) {
    ++res.candidates_checked;
    bool orthogonal = true;
    if (fast) {
      for (const auto& m : encoded) {
        bool ok = false;
        for (int j = 0; j < d && !ok; ++j) {
          const EncodedCoord& a = values[idx[static_cast<std::size_t>(j)]];
          const EncodedCoord& b = m[static_cast<std::size_t>(j)];
          ok = (a.sym == b.sym) && (a.val != b.val);
        }
        if (!ok) {
          orthogonal = false;
          break;
        }
      }
    } else {
      std::vector<SymbolicReal> coords;
      for (int j = 0; j < d; ++j) coords.push_back(value_reals[idx[static_cast<std::size_t>(j)]]);
      Vector s{std::move(coords)};
      for (const Vector& m : members) {
        const Vector diff = s - m;
        bool ok = false;
        for (int j = 0; j < d && !ok; ++j) ok = diff[j].is_nonzero_integer();
        if (!ok) {
          orthogonal = false;
          break;
        }
      }
    }
    if (orthogonal) {
      std::vector<SymbolicReal> coords;
      for (int j = 0; j < d; ++j) coords.push_back(value_reals[idx[static_cast<std::size_t>(j)]]);
      Vector s{std::move(coords)};
      if (!member_of(fs, s)) {
        res.extension_found = true;
        res.witness = std::move(s);
        return res;
      }
    }
    int j = d - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] + 1 == values.size()) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
  }
  return res;
}

}  // namespace orthopack
