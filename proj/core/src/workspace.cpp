#include "orthopack/workspace.hpp"

#include "orthopack/errors.hpp"
#include "orthopack/json_io.hpp"

namespace orthopack {

Workspace default_workspace() {
  Workspace w;
  w.witnesses[SymbolId{"alpha"}] = parse_witness_preset("sqrt2/2");
  w.witnesses[SymbolId{"beta"}] = parse_witness_preset("sqrt3/3");
  w.witnesses[SymbolId{"gamma"}] = parse_witness_preset("sqrt5/5");
  return w;
}

nlohmann::json workspace_to_json(const Workspace& w) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [id, spec] : w.witnesses) witnesses[id.name] = spec.preset;
  return nlohmann::json{{"schema", kWorkspaceSchema}, {"dimension", w.dimension},
                        {"witnesses", std::move(witnesses)}, {"window", w.window},
                        {"kmax", w.kmax},                    {"out_dir", w.out_dir}};
}

Workspace workspace_from_json(const nlohmann::json& j) {
  if (j.value("schema", "") != kWorkspaceSchema)
    throw ValidationError("expected a workspace artifact");
  Workspace w;
  w.dimension = j.at("dimension").get<int>();
  if (w.dimension < 1) throw ValidationError("workspace dimension must be positive");
  for (const auto& [name, preset] : j.at("witnesses").items())
    w.witnesses[SymbolId{name}] = parse_witness_preset(preset.get<std::string>());
  w.window = j.at("window").get<int>();
  w.kmax = j.at("kmax").get<int>();
  if (w.window < 1 || w.kmax < 1) throw ValidationError("workspace bounds must be positive");
  w.out_dir = j.at("out_dir").get<std::string>();
  return w;
}

SymbolWitness witness_of(const Workspace& w) {
  SymbolWitness out;
  for (const auto& [id, spec] : w.witnesses) out.assign(id, spec);
  return out;
}

void require_symbols_declared(const Workspace& w, const FamilySet& fs) {
  for (const SymbolId& id : symbols_of(fs))
    if (w.witnesses.count(id) == 0)
      throw ValidationError("symbol " + id.name + " is not declared in the workspace");
}

}  // namespace orthopack
