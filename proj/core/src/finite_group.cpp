#include "orthopack/finite_group.hpp"

#include <algorithm>
#include <set>

#include "orthopack/errors.hpp"
#include "orthopack/rational.hpp"

namespace orthopack {

namespace {

using int128 = __int128;

constexpr long long kMaxMaterializedOrder = 1LL << 40;

long long mod_reduce(long long v, long long m) {
  const long long r = v % m;
  return r < 0 ? r + m : r;
}

bool is_odd_prime(long long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long long f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

// Modular inverse of a mod m for coprime a, m via extended Euclid.
long long mod_inverse(long long a, long long m) {
  long long r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    const long long r2 = r0 - q * r1;
    const long long s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw ValidationError("modular inverse of a non-unit");
  return mod_reduce(s0, m);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw ValidationError("group needs at least one modulus");
  for (const long long m : moduli_) {
    if (m < 2) throw ValidationError("group moduli must be at least 2");
    if (order_ > kMaxMaterializedOrder / m) throw ValidationError("group order too large to enumerate");
    order_ *= m;
  }
}

void FiniteGroup::check_element(const GroupElement& e) const {
  if (e.size() != moduli_.size()) throw DimensionMismatch("group element has wrong rank");
}

GroupElement FiniteGroup::reduce(GroupElement e) const {
  check_element(e);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_reduce(e[i], moduli_[i]);
  return e;
}

GroupElement FiniteGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] + b[i], moduli_[i]);
  return out;
}

GroupElement FiniteGroup::sub(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  GroupElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_reduce(a[i] - b[i], moduli_[i]);
  return out;
}

bool FiniteGroup::is_zero(const GroupElement& e) const {
  check_element(e);
  return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

GroupElement FiniteGroup::element_at(long long index) const {
  if (index < 0 || index >= order_) throw ValidationError("group index out of range");
  GroupElement e(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    e[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return e;
}

long long FiniteGroup::index_of(const GroupElement& e) const {
  check_element(e);
  long long index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const long long v = mod_reduce(e[i], moduli_[i]);
    index = index * moduli_[i] + v;
  }
  return index;
}

void validate_cube_params(const CubeParams& params) {
  if (!is_odd_prime(params.p) || !is_odd_prime(params.q) || !is_odd_prime(params.r))
    throw ValidationError("cube parameters must be odd primes");
  if (!(params.p < params.q && params.q < params.r))
    throw ValidationError("cube parameters must be strictly increasing");
}

FiniteGroup cube_group(const CubeParams& params) {
  validate_cube_params(params);
  return FiniteGroup({params.p * params.p, params.q * params.q, params.r * params.r});
}

long long cube_modulus(const CubeParams& params) {
  validate_cube_params(params);
  const int128 n = int128(params.p * params.p) * (params.q * params.q) * (params.r * params.r);
  if (n > kMaxMaterializedOrder) throw ValidationError("cube modulus too large to enumerate");
  return static_cast<long long>(n);
}

long long phi(const CubeParams& params, const GroupElement& e) {
  validate_cube_params(params);
  if (e.size() != 3) throw DimensionMismatch("cube group elements have three coordinates");
  const long long p2 = params.p * params.p;
  const long long q2 = params.q * params.q;
  const long long r2 = params.r * params.r;
  const long long n = cube_modulus(params);
  const int128 sum = int128(q2) * r2 * mod_reduce(e[0], p2) + int128(p2) * r2 * mod_reduce(e[1], q2) +
                     int128(p2) * q2 * mod_reduce(e[2], r2);
  return static_cast<long long>(sum % n);
}

GroupElement phi_inverse(const CubeParams& params, long long x) {
  validate_cube_params(params);
  const long long n = cube_modulus(params);
  x = mod_reduce(x, n);
  const long long p2 = params.p * params.p;
  const long long q2 = params.q * params.q;
  const long long r2 = params.r * params.r;
  // The image is congruent to q^2 r^2 a mod p^2, and cyclically for b, c.
  const auto solve = [x](long long other1, long long other2, long long m) {
    const long long unit = static_cast<long long>(int128(other1) * other2 % m);
    return static_cast<long long>(int128(mod_reduce(x, m)) * mod_inverse(unit, m) % m);
  };
  return {solve(q2, r2, p2), solve(p2, r2, q2), solve(p2, q2, r2)};
}

std::vector<GroupElement> discrete_cube(const CubeParams& params) {
  validate_cube_params(params);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(params.p * params.q * params.r));
  for (long long a = 0; a < params.p; ++a)
    for (long long b = 0; b < params.q; ++b)
      for (long long c = 0; c < params.r; ++c) out.push_back({a, b, c});
  return out;
}

bool ft_zero_set_h0(const CubeParams& params, const GroupElement& e) {
  validate_cube_params(params);
  if (e.size() != 3) throw DimensionMismatch("cube group elements have three coordinates");
  const long long u = mod_reduce(e[0], params.p * params.p);
  const long long v = mod_reduce(e[1], params.q * params.q);
  const long long w = mod_reduce(e[2], params.r * params.r);
  return (u != 0 && u % params.p == 0) || (v != 0 && v % params.q == 0) ||
         (w != 0 && w % params.r == 0);
}

std::vector<GroupElement> gamma0(const CubeParams& params) {
  validate_cube_params(params);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(params.p * params.q * params.r));
  for (long long a = 0; a < params.p; ++a)
    for (long long b = 0; b < params.q; ++b)
      for (long long c = 0; c < params.r; ++c)
        out.push_back({a * params.p, b * params.q, c * params.r});
  return out;
}

std::vector<GroupElement> lambda0(const CubeParams& params) {
  const FiniteGroup group = cube_group(params);
  std::set<GroupElement> out;
  out.insert({0, 0, 0});
  // Nonzero multiples of each prime inside its squared-modulus cyclic factor.
  std::vector<long long> ns, ks, ms;
  for (long long i = 1; i < params.p; ++i) ns.push_back(i * params.p);
  for (long long i = 1; i < params.q; ++i) ks.push_back(i * params.q);
  for (long long i = 1; i < params.r; ++i) ms.push_back(i * params.r);
  for (const long long n : ns)
    for (const long long k : ks) out.insert(group.reduce({n, 1 - k, 1}));
  for (const long long k : ks)
    for (const long long m : ms) out.insert(group.reduce({1, k, 1 - m}));
  for (const long long n : ns)
    for (const long long m : ms) out.insert(group.reduce({1 - n, 1, m}));
  return {out.begin(), out.end()};
}

Certificate exhaustive_maximality(const std::vector<GroupElement>& members,
                                  const std::function<bool(const GroupElement&)>& zero,
                                  const FiniteGroup& group, long long budget) {
  if (budget < 1) throw ValidationError("budget must be positive");
  const long long tests = group.order() * static_cast<long long>(members.size());
  if (members.empty() || tests > budget)
    throw BoundExceeded("exhaustive maximality scan over " + std::to_string(tests) +
                        " membership tests exceeds the budget");
  std::vector<char> member(static_cast<std::size_t>(group.order()), 0);
  for (const GroupElement& m : members) member[static_cast<std::size_t>(group.index_of(m))] = 1;
  for (long long idx = 0; idx < group.order(); ++idx) {
    if (member[static_cast<std::size_t>(idx)]) continue;
    const GroupElement s = group.element_at(idx);
    const bool extends = std::all_of(members.begin(), members.end(), [&](const GroupElement& m) {
      return zero(group.sub(s, m));
    });
    if (extends) {
      const nlohmann::json witness{{"extension", s}, {"index", idx}};
      return Certificate::fail("maximal", witness,
                               {{"group_order", group.order()}, {"set_size", members.size()}});
    }
  }
  return Certificate::pass(
      "maximal", {{"group_order", group.order()}, {"set_size", members.size()}, {"tests", tests}});
}

bool tiling_check(const std::vector<GroupElement>& tile, const std::vector<GroupElement>& translates,
                  const FiniteGroup& group) {
  if (static_cast<long long>(tile.size()) * static_cast<long long>(translates.size()) !=
      group.order())
    return false;
  std::vector<char> covered(static_cast<std::size_t>(group.order()), 0);
  for (const GroupElement& e : tile)
    for (const GroupElement& t : translates) {
      const std::size_t idx = static_cast<std::size_t>(group.index_of(group.add(e, t)));
      if (covered[idx]) return false;
      covered[idx] = 1;
    }
  return true;
}

Certificate spectrum_check(const std::vector<GroupElement>& candidate,
                           const std::function<bool(const GroupElement&)>& zero,
                           const FiniteGroup& group, std::size_t expected_size) {
  const std::set<GroupElement> unique(candidate.begin(), candidate.end());
  nlohmann::json details{{"size", unique.size()}, {"expected", expected_size}};
  if (unique.size() != expected_size)
    return Certificate::fail("spectrum", {{"reason", "cardinality"}}, details);
  for (const GroupElement& a : unique)
    for (const GroupElement& b : unique) {
      const GroupElement diff = group.sub(a, b);
      if (!group.is_zero(diff) && !zero(diff)) {
        const nlohmann::json witness{{"first", a}, {"second", b}};
        return Certificate::fail("spectrum", witness, details);
      }
    }
  details["pairs"] = unique.size() * unique.size();
  return Certificate::pass("spectrum", details);
}

bool no_overflow_check(const CubeParams& params) {
  validate_cube_params(params);
  const BigInt p(params.p), q(params.q), r(params.r);
  const BigInt max_rep = q * q * r * r * (p - 1) + p * p * r * r * (q - 1) + p * p * q * q * (r - 1);
  return max_rep < p * p * q * q * r * r;
}

}  // namespace orthopack
