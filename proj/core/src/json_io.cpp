#include "orthopack/json_io.hpp"

#include <fstream>
#include <type_traits>

#include "orthopack/errors.hpp"

namespace orthopack {

namespace {

// Every artifact carries a versioned schema tag; loaders refuse anything else.
void require_schema(const json& j, const char* expected) {
  const std::string got = j.value("schema", "");
  if (got != expected)
    throw ValidationError("expected schema " + std::string(expected) + ", found \"" + got + "\"");
}

}  // namespace

void to_json(json& j, const SymbolicReal& x) {
  json syms = json::object();
  for (const auto& [id, c] : x.symbol_part()) syms[id.name] = c;
  j = json{{"rat", rational_repr(x.rational_part())}, {"syms", std::move(syms)}};
}

void from_json(const json& j, SymbolicReal& x) {
  if (!j.is_object() || !j.contains("rat"))
    throw ValidationError("symbolic value must be an object with a rat field");
  x = SymbolicReal(parse_rational(j.at("rat").get<std::string>()));
  if (j.contains("syms")) {
    for (const auto& [name, coeff] : j.at("syms").items()) {
      if (!coeff.is_number_integer())
        throw ValidationError("symbol coefficient must be an integer");
      x += SymbolicReal::symbol(name, coeff.get<std::int64_t>());
    }
  }
}

void to_json(json& j, const Vector& v) {
  j = json::array();
  for (const SymbolicReal& x : v) j.push_back(json(x));
}

void from_json(const json& j, Vector& v) {
  if (!j.is_array()) throw ValidationError("vector must be an array");
  std::vector<SymbolicReal> coords;
  coords.reserve(j.size());
  for (const json& e : j) coords.push_back(e.get<SymbolicReal>());
  v = Vector(std::move(coords));
}

void to_json(json& j, const Certificate& c) {
  j = json{{"schema", kCertificateSchema},
           {"check", c.check},
           {"verdict", verdict_name(c.verdict)},
           {"witness", c.witness},
           {"details", c.details}};
  if (c.evidence_only) j["evidence_only"] = true;
}

void from_json(const json& j, Certificate& c) {
  c.check = j.at("check").get<std::string>();
  std::string v = j.at("verdict").get<std::string>();
  if (v == "pass")
    c.verdict = Verdict::Pass;
  else if (v == "fail")
    c.verdict = Verdict::Fail;
  else if (v == "undecidable")
    c.verdict = Verdict::Undecidable;
  else
    throw ValidationError("unknown verdict: " + v);
  c.witness = j.value("witness", json(nullptr));
  c.details = j.value("details", json::object());
  c.evidence_only = j.value("evidence_only", false);
}

json pointset_to_json(const std::vector<Vector>& pts, int dimension) {
  json points = json::array();
  for (const Vector& p : pts) points.push_back(json(p));
  return json{{"schema", kPointSetSchema}, {"dimension", dimension}, {"points", std::move(points)}};
}

std::vector<Vector> pointset_from_json(const json& j) {
  require_schema(j, kPointSetSchema);
  std::vector<Vector> pts;
  int dim = j.at("dimension").get<int>();
  for (const json& e : j.at("points")) {
    Vector v = e.get<Vector>();
    if (v.dim() != dim) throw ValidationError("point dimension differs from set dimension");
    pts.push_back(std::move(v));
  }
  return pts;
}

namespace {

json axis_out(int axis) { return axis + 1; }

int axis_in(const json& j, const char* key) {
  const int a = j.at(key).get<int>();
  if (a < 1) throw ValidationError("axis fields are 1-based in serialized form");
  return a - 1;
}

}  // namespace

json family_to_json(const Family& f) {
  return std::visit(
      [](const auto& node) -> json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PointFamily>) {
          return json{{"variant", "point"}, {"base", node.base}};
        } else if constexpr (std::is_same_v<T, LineFamily>) {
          return json{{"variant", "line"}, {"base", node.base}, {"axis", axis_out(node.axis)}};
        } else if constexpr (std::is_same_v<T, PlaneFamily>) {
          return json{{"variant", "plane"},
                      {"base", node.base},
                      {"axis_plus", axis_out(node.axis_plus)},
                      {"axis_minus", axis_out(node.axis_minus)}};
        } else if constexpr (std::is_same_v<T, PuncturedLattice>) {
          json punct = json::array();
          for (const int c : node.punctured) punct.push_back(axis_out(c));
          return json{{"variant", "punctured_lattice"}, {"dim", node.dim}, {"punctured", punct}};
        } else if constexpr (std::is_same_v<T, HalfPunctured>) {
          return json{{"variant", "half_punctured"}, {"head", node.head}, {"tail", node.tail}};
        } else if constexpr (std::is_same_v<T, TranslatedLattice>) {
          return json{{"variant", "translated_lattice"}, {"base", node.base}};
        } else {
          return json{{"variant", "product"},
                      {"left", family_to_json(*node.left)},
                      {"right", family_to_json(*node.right)}};
        }
      },
      f.node);
}

Family family_from_json(const json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "point") return Family{PointFamily{j.at("base").get<Vector>()}};
  if (variant == "line")
    return Family{LineFamily{j.at("base").get<Vector>(), axis_in(j, "axis")}};
  if (variant == "plane")
    return Family{PlaneFamily{j.at("base").get<Vector>(), axis_in(j, "axis_plus"),
                              axis_in(j, "axis_minus")}};
  if (variant == "punctured_lattice") {
    PuncturedLattice node;
    node.dim = j.at("dim").get<int>();
    for (const json& c : j.at("punctured")) {
      const int a = c.get<int>();
      if (a < 1) throw ValidationError("axis fields are 1-based in serialized form");
      node.punctured.push_back(a - 1);
    }
    return Family{std::move(node)};
  }
  if (variant == "half_punctured")
    return Family{HalfPunctured{j.at("head").get<int>(), j.at("tail").get<int>()}};
  if (variant == "translated_lattice")
    return Family{TranslatedLattice{j.at("base").get<Vector>()}};
  if (variant == "product") {
    ProductFamily node;
    node.left = std::make_shared<Family>(family_from_json(j.at("left")));
    node.right = std::make_shared<Family>(family_from_json(j.at("right")));
    return Family{std::move(node)};
  }
  throw ValidationError("unknown family variant: " + variant);
}

json familyset_to_json(const FamilySet& fs) {
  json families = json::array();
  for (const Family& f : fs.families) families.push_back(family_to_json(f));
  return json{
      {"schema", kFamilySetSchema}, {"dimension", fs.dimension}, {"families", std::move(families)}};
}

FamilySet familyset_from_json(const json& j) {
  require_schema(j, kFamilySetSchema);
  FamilySet fs;
  fs.dimension = j.at("dimension").get<int>();
  for (const json& e : j.at("families")) {
    Family f = family_from_json(e);
    if (f.dimension() != fs.dimension)
      throw ValidationError("family dimension differs from set dimension");
    fs.families.push_back(std::move(f));
  }
  return fs;
}

json cover_to_json(const std::vector<AffineSubspace>& cover, int dimension) {
  json rows = json::array();
  for (const AffineSubspace& s : cover) {
    json basis = json::array();
    for (const Vector& b : s.basis) basis.push_back(json(b));
    rows.push_back(json{{"point", s.point}, {"basis", std::move(basis)}});
  }
  return json{{"schema", kCoverSchema}, {"dimension", dimension}, {"subspaces", std::move(rows)}};
}

std::vector<AffineSubspace> cover_from_json(const json& j) {
  require_schema(j, kCoverSchema);
  std::vector<AffineSubspace> cover;
  for (const json& row : j.at("subspaces")) {
    AffineSubspace s;
    s.point = row.at("point").get<Vector>();
    for (const json& b : row.at("basis")) s.basis.push_back(b.get<Vector>());
    cover.push_back(std::move(s));
  }
  return cover;
}

json residues_to_json(const std::vector<long long>& residues, long long modulus) {
  return json{{"schema", kResiduesSchema}, {"modulus", modulus}, {"residues", residues}};
}

std::vector<long long> residues_from_json(const json& j, long long* modulus) {
  require_schema(j, kResiduesSchema);
  const long long m = j.at("modulus").get<long long>();
  if (m < 1) throw ValidationError("residue modulus must be positive");
  if (modulus != nullptr) *modulus = m;
  auto residues = j.at("residues").get<std::vector<long long>>();
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= m)
      throw ValidationError("residue out of range for modulus");
    if (i > 0 && residues[i] <= residues[i - 1])
      throw ValidationError("residues must be strictly increasing");
  }
  return residues;
}

json intervals_to_json(const IntervalUnion& h) {
  json pairs = json::array();
  for (const long long s : h.starts) pairs.push_back(json::array({s, s + 1}));
  return json{{"schema", kIntervalsSchema}, {"modulus", h.modulus}, {"intervals", std::move(pairs)}};
}

IntervalUnion intervals_from_json(const json& j) {
  require_schema(j, kIntervalsSchema);
  IntervalUnion h;
  h.modulus = j.at("modulus").get<long long>();
  for (const json& pair : j.at("intervals")) {
    if (!pair.is_array() || pair.size() != 2 || pair.at(1) != pair.at(0).get<long long>() + 1)
      throw ValidationError("intervals must be [start, start + 1] pairs");
    h.starts.push_back(pair.at(0).get<long long>());
  }
  validate_interval_union(h);
  return h;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw OrthopackError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw OrthopackError("cannot open " + path + " for writing");
  out << dump_canonical(j);
  if (!out) throw OrthopackError("failed writing " + path);
}

}  // namespace orthopack
