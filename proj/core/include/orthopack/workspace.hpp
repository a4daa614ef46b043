#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "orthopack/family.hpp"
#include "orthopack/witness.hpp"

namespace orthopack {

// Session defaults shared by the command-line subcommands: the ambient
// dimension, the declared symbols with their numeric witnesses, truncation
// bounds, and where artifacts go. The JSON form round-trips losslessly.
struct Workspace {
  int dimension = 3;
  std::map<SymbolId, WitnessSpec> witnesses;
  int window = 4;
  int kmax = 4;
  std::string out_dir = ".";

  bool operator==(const Workspace&) const = default;
};

// alpha: sqrt2/2, beta: sqrt3/3, gamma: sqrt5/5 in dimension 3.
Workspace default_workspace();

nlohmann::json workspace_to_json(const Workspace& w);
Workspace workspace_from_json(const nlohmann::json& j);

SymbolWitness witness_of(const Workspace& w);

// Every symbol used by the set must be declared in the workspace.
void require_symbols_declared(const Workspace& w, const FamilySet& fs);

}  // namespace orthopack
