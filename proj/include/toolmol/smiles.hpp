// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_SMILES_HPP
#define TOOLMOL_SMILES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "toolmol/molecule.hpp"

namespace toolmol {

class SmilesError : public std::runtime_error {
 public:
  SmilesError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct SmilesOptions {
  // Permit [*] / [*1] attachment markers (fragment SMILES).
  bool allowMarkers = false;
  // Permit disconnected input ('.'). The result is flagged multi-component
  // via Molecule::componentCount().
  bool allowMultiComponent = true;
};

// Parses the OpenSMILES subset: organic-subset and bracket atoms, aromatic
// lowercase, charges, explicit H counts, branches, ring closures (digits and
// %nn) and bond symbols - = # :. Stereochemistry and isotopes are rejected.
// Aromatic input is kekulized internally; aromatic flags are retained.
Molecule parseSmiles(std::string_view text, const SmilesOptions& options = {});

// Deterministic canonical SMILES: atom ordering by iterated neighborhood
// refinement, so isomorphic inputs serialize identically. Used as the
// dedup/cache key throughout.
std::string writeSmiles(const Molecule& m);

// parse + write.
std::string canonicalSmiles(std::string_view text);

}  // namespace toolmol

#endif
