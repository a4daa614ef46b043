#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orthopack/certificate.hpp"

namespace orthopack {

// Machine-readable run record: what was asked, digests of what was read,
// every certificate produced, and the tool version. Timings are kept out of
// the serialized form unless explicitly enabled so identical runs produce
// byte-identical artifacts.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<Certificate> certificates;
  std::map<std::string, double> timings;  // seconds by step name
  bool include_timings = false;
  std::string version;
};

std::string sha256_hex(const std::string& bytes);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// One line per certificate plus a header; stable ordering.
std::string render_report_text(const Report& r);

// check,verdict,evidence_only rows with a header line.
std::string render_report_csv(const Report& r);

}  // namespace orthopack
