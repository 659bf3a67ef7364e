// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_TOOLBOX_HPP
#define TOOLMOL_TOOLBOX_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toolmol/descriptors.hpp"
#include "toolmol/molecule.hpp"
#include "toolmol/random.hpp"

namespace toolmol {

// Output of one edit. Failures never touch the working molecule.
struct ToolResult {
  bool ok = false;
  std::optional<Molecule> molecule;
  std::string smiles;  // canonical, on success
  std::string message;
  std::string toolName;
  nlohmann::ordered_json parameters;
  // Molecular weight passed 700 g/mol. A soft warning: the edit stands, the
  // agent treats it as a stop signal.
  bool mwWarning = false;

  static ToolResult failure(std::string tool, nlohmann::ordered_json params, std::string msg);
  static ToolResult success(std::string tool, nlohmann::ordered_json params, Molecule m);
};

// Predefined graft fragments. Each entry is a connected fragment whose
// attachment atom has spare valence.
struct FunctionalGroup {
  std::string name;
  std::string smiles;
  int attachmentAtom;
};

const std::vector<FunctionalGroup>& functionalGroupTable();
const FunctionalGroup* findFunctionalGroup(const std::string& name);

// The seven edit tools. All validate their output (valence + single
// component) and re-canonicalize; crossover consumes the caller's RNG stream.
ToolResult addAtom(const Molecule& mol, int idx, const std::string& element,
                   const std::string& bond);
ToolResult replaceAtom(const Molecule& mol, int idx, const std::string& element);
ToolResult addFunctionalGroup(const Molecule& mol, int idx, const std::string& group,
                              const std::string& bond);
ToolResult addSubstructure(const Molecule& mol, int idx, const std::string& substructure,
                           const std::string& bond);
ToolResult replaceSubstructure(const Molecule& mol, int idx, const std::string& oldSubstructure,
                               const std::string& newSubstructure);
ToolResult removeSubstructure(const Molecule& mol, int idx, const std::string& substructure);
ToolResult crossoverMolecules(const Molecule& mol1, int idx1, const Molecule& mol2, int idx2,
                              Rng& rng);

// Acyclic bonds at an atom that crossover may sever.
std::vector<int> severableBonds(const Molecule& m, int atom);

// Per-atom structure report: atom_index, element, num_substitutable_hydrogens,
// num_available_valences, num_neighboring_atoms, neighbor_indices, is_in_ring,
// centrality.
nlohmann::ordered_json getLigandStructure(const Molecule& mol);

// Pluggable source for the QED/SA entries of the property report (and of the
// objective vector). The default uses the built-in surrogates.
class PropertyProvider {
 public:
  virtual ~PropertyProvider() = default;
  virtual double qed(const Molecule& m, const DescriptorSet& d) const = 0;
  virtual double sa(const Molecule& m, const DescriptorSet& d) const = 0;
};

const PropertyProvider& surrogateProvider();

// Property report: QED, SA, molecular_weight, LogP, TPSA, num_HBond_donors,
// num_HBond_acceptors, num_rotatable_bonds, num_aromatic_rings.
nlohmann::ordered_json calculateProperties(const Molecule& mol,
                                           const PropertyProvider& provider = surrogateProvider());

// JSON dispatch used by the agent loop. Molecule parameters arrive as SMILES
// strings; parse errors, bad indices and schema violations come back as
// failed ToolResults, never exceptions.
struct ToolSchema {
  std::string name;
  std::string description;
  nlohmann::ordered_json parameters;  // JSON-schema object
};

const std::vector<ToolSchema>& toolSchemas();
nlohmann::json toolSchemasJson();

ToolResult dispatchTool(const std::string& name, const nlohmann::json& arguments, Rng& rng,
                        double mwCap = 700.0);

}  // namespace toolmol

#endif
