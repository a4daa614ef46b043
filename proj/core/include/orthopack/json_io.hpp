#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthopack/certificate.hpp"
#include "orthopack/checks.hpp"
#include "orthopack/family.hpp"
#include "orthopack/fourier.hpp"
#include "orthopack/symbolic.hpp"
#include "orthopack/vector.hpp"

namespace orthopack {

// Schema tags carried by every serialized artifact.
inline constexpr const char* kFamilySetSchema = "orthopack.familyset/1";
inline constexpr const char* kPointSetSchema = "orthopack.pointset/1";
inline constexpr const char* kCertificateSchema = "orthopack.certificate/1";
inline constexpr const char* kReportSchema = "orthopack.report/1";
inline constexpr const char* kCoverSchema = "orthopack.cover/1";
inline constexpr const char* kResiduesSchema = "orthopack.residues/1";
inline constexpr const char* kIntervalsSchema = "orthopack.intervals/1";
inline constexpr const char* kLiftSchema = "orthopack.lift/1";
inline constexpr const char* kWorkspaceSchema = "orthopack.workspace/1";

// SymbolicReal <-> {"rat":"p/q","syms":{"alpha":1,...}}; canonical form has a
// reduced fraction with positive denominator and key-sorted symbol map.
void to_json(json& j, const SymbolicReal& x);
void from_json(const json& j, SymbolicReal& x);

void to_json(json& j, const Vector& v);
void from_json(const json& j, Vector& v);

void to_json(json& j, const Certificate& c);
void from_json(const json& j, Certificate& c);

json pointset_to_json(const std::vector<Vector>& pts, int dimension);
std::vector<Vector> pointset_from_json(const json& j);

// Families serialize with a "variant" tag; axis fields are 1-based in the
// file format (matching certificate witness rows) and 0-based in memory.
json family_to_json(const Family& f);
Family family_from_json(const json& j);

json familyset_to_json(const FamilySet& fs);
FamilySet familyset_from_json(const json& j);

// Affine covers as {point, basis} rows over symbolic vectors.
json cover_to_json(const std::vector<AffineSubspace>& cover, int dimension);
std::vector<AffineSubspace> cover_from_json(const json& j);

// Finite-group residue sets as sorted integer arrays with their modulus.
json residues_to_json(const std::vector<long long>& residues, long long modulus);
std::vector<long long> residues_from_json(const json& j, long long* modulus = nullptr);

// Interval unions as sorted [start, start + 1] integer endpoint pairs.
json intervals_to_json(const IntervalUnion& h);
IntervalUnion intervals_from_json(const json& j);

// Serialized with sorted keys and no trailing newline variance; the canonical
// byte form used for artifact files.
std::string dump_canonical(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace orthopack
