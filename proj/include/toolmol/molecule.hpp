// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_MOLECULE_HPP
#define TOOLMOL_MOLECULE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toolmol/element.hpp"

namespace toolmol {

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

inline int bondOrderValue(BondOrder o) {
  return o == BondOrder::Aromatic ? 1 : static_cast<int>(o);
}

struct Atom {
  Element element = Element::C;
  int formalCharge = 0;
  bool aromatic = false;
  // Set for bracket atoms; implicit-H derivation applies otherwise.
  std::optional<int> explicitHCount;
  // Attachment-marker label for fragment SMILES ([*1] -> 1); 0 = none.
  int markerLabel = 0;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;

  int other(int atom) const { return atom == a ? b : a; }
};

struct ValenceViolation {
  int atom;
  int bondOrderSum;  // kekulized, plus hydrogens
  int maxAllowed;
  std::string message;
};

class MoleculeError : public std::runtime_error {
 public:
  explicit MoleculeError(const std::string& what) : std::runtime_error(what) {}
};

class MoleculeBuilder;

// Immutable attributed molecular graph. Construction (via MoleculeBuilder)
// perceives rings, kekulizes the aromatic subgraph and derives hydrogen
// counts; every edit produces a new Molecule.
class Molecule {
 public:
  Molecule() = default;

  int atomCount() const { return static_cast<int>(atoms_.size()); }
  int bondCount() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const Bond& bond(int i) const { return bonds_[static_cast<std::size_t>(i)]; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  // Indices of bonds incident to an atom.
  const std::vector<int>& incidentBonds(int atom) const {
    return incident_[static_cast<std::size_t>(atom)];
  }
  std::vector<int> neighbors(int atom) const;
  int degree(int atom) const {
    return static_cast<int>(incident_[static_cast<std::size_t>(atom)].size());
  }
  // Bond index between two atoms, or -1.
  int bondBetween(int a, int b) const;

  // Kekulized order of a bond (aromatic bonds resolved to 1 or 2).
  int kekulizedOrder(int bondIndex) const {
    return kekulized_[static_cast<std::size_t>(bondIndex)];
  }
  // Sum of kekulized bond orders at an atom (hydrogens not included).
  int bondOrderSum(int atom) const;

  int implicitHydrogens(int atom) const {
    return implicitH_[static_cast<std::size_t>(atom)];
  }
  // Implicit plus explicit hydrogens.
  int totalHydrogens(int atom) const;

  bool atomInRing(int atom) const { return atomInRing_[static_cast<std::size_t>(atom)]; }
  bool bondInRing(int bondIndex) const {
    return bondInRing_[static_cast<std::size_t>(bondIndex)];
  }

  int componentCount() const { return componentCount_; }
  const std::vector<int>& componentLabels() const { return componentLabel_; }
  bool connected() const { return componentCount_ == 1; }

  bool hasMarkers() const;

  // Atoms whose kekulized bond-order sum plus hydrogens exceeds every allowed
  // valence for their charge state. Empty result = ok.
  std::vector<ValenceViolation> valenceViolations() const;

  friend class MoleculeBuilder;

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> kekulized_;
  std::vector<int> implicitH_;
  std::vector<bool> atomInRing_;
  std::vector<bool> bondInRing_;
  std::vector<int> componentLabel_;
  int componentCount_ = 0;
};

// Mutable staging area for molecule construction and edits.
class MoleculeBuilder {
 public:
  MoleculeBuilder() = default;
  explicit MoleculeBuilder(const Molecule& m);

  int addAtom(Atom a);
  // Fails on self-bonds and duplicate atom pairs.
  void addBond(int a, int b, BondOrder order);

  Atom& atom(int i) { return atoms_[static_cast<std::size_t>(i)]; }
  const Atom& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
  int atomCount() const { return static_cast<int>(atoms_.size()); }
  std::vector<Bond>& bonds() { return bonds_; }

  bool hasBond(int a, int b) const;
  void removeBond(int a, int b);
  // Removes atoms (and their bonds); remaining atoms are renumbered in order.
  void removeAtoms(const std::vector<int>& atomIndices);

  // Re-derives implicit hydrogens for an atom after its bonding changed.
  void clearExplicitH(int atom) {
    atoms_[static_cast<std::size_t>(atom)].explicitHCount.reset();
  }

  struct BuildOptions {
    // Permit marker pseudo-atoms (fragment mode).
    bool allowMarkers = false;
    // Reject molecules that fail the valence check.
    bool requireValid = true;
  };

  // Finalizes: perceives rings, demotes out-of-ring aromatic bonds to single,
  // kekulizes, derives implicit hydrogens and checks valence. Throws
  // MoleculeError on kekulization or valence failure.
  Molecule build(const BuildOptions& options) const;
  Molecule build() const { return build(BuildOptions{}); }

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
};

// Labels connected components 0..k-1 in first-seen atom order; returns count.
int connectedComponents(const Molecule& m, std::vector<int>* labels = nullptr);

}  // namespace toolmol

#endif
