// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_ELEMENT_HPP
#define TOOLMOL_ELEMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toolmol {

// Organic-subset element model. Lookups for anything outside this set fail.
enum class Element : std::uint8_t {
  B,
  C,
  N,
  O,
  P,
  S,
  F,
  Cl,
  Br,
  I,
  // Attachment-marker pseudo-atom for fragment SMILES ([*1]); never part of a
  // finished molecule.
  Wildcard,
};

std::string_view elementSymbol(Element e);

// Accepts "C", "Cl", ... (case-sensitive); nullopt for unsupported symbols.
std::optional<Element> elementFromSymbol(std::string_view symbol);

// Standard atomic weight, g/mol.
double atomicWeight(Element e);
double hydrogenWeight();

// Allowed total bond-order counts for a neutral atom:
// B(3), C(4), N(3,5), O(2), P(3,5), S(2,4,6), halogens(1).
const std::vector<int>& defaultValences(Element e);

// Charge-adjusted allowed valences. Charge shifts the electron bookkeeping:
// right-of-carbon elements (N,O,P,S,halogens) gain a bond per positive charge
// and lose one per negative (N+ -> 4, O- -> 1); boron runs the other way
// (B- -> 4); carbon loses a bond for either sign (C+ and C- -> 3). Pentavalent
// options that a charge would push past the octet bookkeeping are dropped
// (N+ is exactly 4, never 6).
std::vector<int> allowedValences(Element e, int formalCharge);

// Largest allowed valence for the charge state, or 0 if none.
int maxAllowedValence(Element e, int formalCharge);

// Smallest allowed valence >= bondOrderSum, or nullopt if every allowed
// valence is exceeded.
std::optional<int> smallestValenceAtLeast(Element e, int formalCharge,
                                          int bondOrderSum);

// Elements that may carry the aromatic flag: B, C, N, O, P, S.
bool aromaticCapable(Element e);

// Elements writable without brackets in SMILES: B, C, N, O, P, S, F, Cl, Br, I.
bool organicSubset(Element e);

}  // namespace toolmol

#endif
