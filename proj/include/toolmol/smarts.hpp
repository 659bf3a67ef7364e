// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_SMARTS_HPP
#define TOOLMOL_SMARTS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolmol/molecule.hpp"

namespace toolmol {

class SmartsError : public std::runtime_error {
 public:
  SmartsError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Substructure pattern subset: element symbols (uppercase aliphatic,
// lowercase aromatic), wildcard '*', branches, ring closures, bond symbols
// - = # : and bracket atoms combining element, charge, H<count> and the
// degree primitive D<n>. Anything else is rejected with a position.
class SmartsPattern {
 public:
  struct AtomPredicate {
    std::optional<Element> element;
    std::optional<bool> aromatic;
    std::optional<int> charge;
    std::optional<int> hCount;
    std::optional<int> degree;
  };

  enum class BondPredicate : std::uint8_t {
    SingleOrAromatic,  // default bond
    Single,
    Double,
    Triple,
    Aromatic,
  };

  struct PatternBond {
    int a;
    int b;
    BondPredicate predicate;
  };

  static SmartsPattern parse(std::string_view text);

  int atomCount() const { return static_cast<int>(atoms_.size()); }
  const std::vector<AtomPredicate>& atoms() const { return atoms_; }
  const std::vector<PatternBond>& bonds() const { return bonds_; }
  const std::string& text() const { return text_; }

  // All distinct matches as sorted molecule-atom index sets.
  std::vector<std::vector<int>> matchSets(const Molecule& m) const;
  // Distinct match sets that contain the anchor atom.
  std::vector<std::vector<int>> matchSetsContaining(const Molecule& m, int anchor) const;

 private:
  std::vector<AtomPredicate> atoms_;
  std::vector<PatternBond> bonds_;
  std::string text_;
};

}  // namespace toolmol

#endif
