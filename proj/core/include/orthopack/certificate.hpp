#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace orthopack {

using nlohmann::json;

enum class Verdict { Pass, Fail, Undecidable };

const char* verdict_name(Verdict v);

// Machine-checkable outcome of a verification step. A Fail carries a witness
// that can be re-validated independently; details hold counts, traces and
// enclosures. evidence_only marks verdicts from discretized searches that do
// not constitute proof.
struct Certificate {
  Verdict verdict = Verdict::Pass;
  std::string check;
  json witness = nullptr;
  json details = json::object();
  bool evidence_only = false;

  static Certificate pass(std::string check, json details = json::object()) {
    return {Verdict::Pass, std::move(check), nullptr, std::move(details), false};
  }
  static Certificate fail(std::string check, json witness, json details = json::object()) {
    return {Verdict::Fail, std::move(check), std::move(witness), std::move(details), false};
  }
  static Certificate undecidable(std::string check, json details) {
    return {Verdict::Undecidable, std::move(check), nullptr, std::move(details), false};
  }

  bool passed() const { return verdict == Verdict::Pass; }
};

}  // namespace orthopack
