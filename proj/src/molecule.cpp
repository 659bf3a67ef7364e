// SPDX-License-Identifier: Apache-2.0

#include "toolmol/molecule.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace toolmol {

namespace {

std::string atomLabel(const Atom& a, int index) {
  return std::string(elementSymbol(a.element)) + "@" + std::to_string(index);
}

}  // namespace

std::vector<int> Molecule::neighbors(int atom) const {
  std::vector<int> out;
  out.reserve(incident_[static_cast<std::size_t>(atom)].size());
  for (int bi : incident_[static_cast<std::size_t>(atom)]) {
    out.push_back(bonds_[static_cast<std::size_t>(bi)].other(atom));
  }
  return out;
}

int Molecule::bondBetween(int a, int b) const {
  for (int bi : incident_[static_cast<std::size_t>(a)]) {
    if (bonds_[static_cast<std::size_t>(bi)].other(a) == b) return bi;
  }
  return -1;
}

int Molecule::bondOrderSum(int atom) const {
  int sum = 0;
  for (int bi : incident_[static_cast<std::size_t>(atom)]) {
    sum += kekulized_[static_cast<std::size_t>(bi)];
  }
  return sum;
}

int Molecule::totalHydrogens(int atom) const {
  const Atom& a = atoms_[static_cast<std::size_t>(atom)];
  return a.explicitHCount.value_or(implicitH_[static_cast<std::size_t>(atom)]);
}

bool Molecule::hasMarkers() const {
  for (const Atom& a : atoms_) {
    if (a.element == Element::Wildcard) return true;
  }
  return false;
}

std::vector<ValenceViolation> Molecule::valenceViolations() const {
  std::vector<ValenceViolation> out;
  for (int i = 0; i < atomCount(); ++i) {
    const Atom& a = atoms_[static_cast<std::size_t>(i)];
    if (a.element == Element::Wildcard) continue;
    int sum = bondOrderSum(i) + totalHydrogens(i);
    int maxV = maxAllowedValence(a.element, a.formalCharge);
    if (sum > maxV) {
      out.push_back({i, sum, maxV,
                     "valence " + std::to_string(sum) + " exceeds maximum " +
                         std::to_string(maxV) + " at atom " + atomLabel(a, i)});
    }
  }
  return out;
}

MoleculeBuilder::MoleculeBuilder(const Molecule& m)
    : atoms_(m.atoms()), bonds_(m.bonds()) {}

int MoleculeBuilder::addAtom(Atom a) {
  atoms_.push_back(a);
  return static_cast<int>(atoms_.size()) - 1;
}

void MoleculeBuilder::addBond(int a, int b, BondOrder order) {
  if (a == b) throw MoleculeError("self-bond at atom " + std::to_string(a));
  if (a < 0 || b < 0 || a >= atomCount() || b >= atomCount()) {
    throw MoleculeError("bond endpoint out of range");
  }
  if (hasBond(a, b)) {
    throw MoleculeError("duplicate bond between atoms " + std::to_string(a) +
                        " and " + std::to_string(b));
  }
  bonds_.push_back({a, b, order});
}

bool MoleculeBuilder::hasBond(int a, int b) const {
  return std::any_of(bonds_.begin(), bonds_.end(), [&](const Bond& bd) {
    return (bd.a == a && bd.b == b) || (bd.a == b && bd.b == a);
  });
}

void MoleculeBuilder::removeBond(int a, int b) {
  std::erase_if(bonds_, [&](const Bond& bd) {
    return (bd.a == a && bd.b == b) || (bd.a == b && bd.b == a);
  });
}

void MoleculeBuilder::removeAtoms(const std::vector<int>& atomIndices) {
  std::vector<bool> drop(atoms_.size(), false);
  for (int i : atomIndices) drop[static_cast<std::size_t>(i)] = true;

  std::vector<int> remap(atoms_.size(), -1);
  std::vector<Atom> kept;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!drop[i]) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(atoms_[i]);
    }
  }
  std::vector<Bond> keptBonds;
  for (const Bond& bd : bonds_) {
    if (drop[static_cast<std::size_t>(bd.a)] || drop[static_cast<std::size_t>(bd.b)]) continue;
    keptBonds.push_back({remap[static_cast<std::size_t>(bd.a)],
                         remap[static_cast<std::size_t>(bd.b)], bd.order});
  }
  atoms_ = std::move(kept);
  bonds_ = std::move(keptBonds);
}

namespace {

// Bridge detection: a bond is in a ring iff it is not a bridge.
void findBridges(int n, const std::vector<Bond>& bonds,
                 const std::vector<std::vector<int>>& incident,
                 std::vector<bool>& bondInRing) {
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  int timer = 0;

  // Iterative DFS to avoid recursion limits on long chains.
  struct Frame {
    int atom;
    int parentBond;
    std::size_t edgePos;
  };
  for (int start = 0; start < n; ++start) {
    if (disc[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<Frame> stack;
    stack.push_back({start, -1, 0});
    disc[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& edges = incident[static_cast<std::size_t>(f.atom)];
      if (f.edgePos < edges.size()) {
        int bi = edges[f.edgePos++];
        if (bi == f.parentBond) continue;
        int to = bonds[static_cast<std::size_t>(bi)].other(f.atom);
        if (disc[static_cast<std::size_t>(to)] == -1) {
          disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
          stack.push_back({to, bi, 0});
        } else {
          low[static_cast<std::size_t>(f.atom)] =
              std::min(low[static_cast<std::size_t>(f.atom)], disc[static_cast<std::size_t>(to)]);
        }
      } else {
        int atom = f.atom;
        int parentBond = f.parentBond;
        stack.pop_back();
        if (parentBond != -1) {
          const Bond& pb = bonds[static_cast<std::size_t>(parentBond)];
          int parent = pb.other(atom);
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(atom)]);
          if (low[static_cast<std::size_t>(atom)] > disc[static_cast<std::size_t>(parent)]) {
            bondInRing[static_cast<std::size_t>(parentBond)] = false;  // bridge
          }
        }
      }
    }
  }
}

int componentScan(int n, const std::vector<std::vector<int>>& incident,
                  const std::vector<Bond>& bonds, std::vector<int>& labels) {
  labels.assign(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (labels[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> stack{start};
    labels[static_cast<std::size_t>(start)] = count;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int bi : incident[static_cast<std::size_t>(a)]) {
        int to = bonds[static_cast<std::size_t>(bi)].other(a);
        if (labels[static_cast<std::size_t>(to)] == -1) {
          labels[static_cast<std::size_t>(to)] = count;
          stack.push_back(to);
        }
      }
    }
    ++count;
  }
  return count;
}

// Backtracking perfect matching on the atoms that must carry a ring double
// bond. Aromatic systems are small, so exhaustive search is fine.
bool kekulizeComponent(const std::vector<int>& needsAtoms,
                       const std::vector<std::vector<std::pair<int, int>>>& adj,
                       std::vector<int>& matchedBond, std::vector<bool>& matched) {
  int unmatchedAtom = -1;
  for (int a : needsAtoms) {
    if (!matched[static_cast<std::size_t>(a)]) {
      unmatchedAtom = a;
      break;
    }
  }
  if (unmatchedAtom == -1) return true;

  for (const auto& [nbr, bondIdx] : adj[static_cast<std::size_t>(unmatchedAtom)]) {
    if (matched[static_cast<std::size_t>(nbr)]) continue;
    matched[static_cast<std::size_t>(unmatchedAtom)] = true;
    matched[static_cast<std::size_t>(nbr)] = true;
    matchedBond.push_back(bondIdx);
    if (kekulizeComponent(needsAtoms, adj, matchedBond, matched)) return true;
    matchedBond.pop_back();
    matched[static_cast<std::size_t>(unmatchedAtom)] = false;
    matched[static_cast<std::size_t>(nbr)] = false;
  }
  return false;
}

}  // namespace

Molecule MoleculeBuilder::build(const BuildOptions& options) const {
  Molecule m;
  m.atoms_ = atoms_;
  m.bonds_ = bonds_;

  const int n = m.atomCount();
  const int nb = m.bondCount();

  for (const Atom& a : m.atoms_) {
    if (a.element == Element::Wildcard && !options.allowMarkers) {
      throw MoleculeError("marker atom outside fragment context");
    }
    if (a.aromatic && !aromaticCapable(a.element)) {
      throw MoleculeError("element " + std::string(elementSymbol(a.element)) +
                          " cannot be aromatic");
    }
    if (a.explicitHCount && *a.explicitHCount < 0) {
      throw MoleculeError("negative hydrogen count");
    }
  }

  m.incident_.assign(static_cast<std::size_t>(n), {});
  for (int bi = 0; bi < nb; ++bi) {
    const Bond& bd = m.bonds_[static_cast<std::size_t>(bi)];
    m.incident_[static_cast<std::size_t>(bd.a)].push_back(bi);
    m.incident_[static_cast<std::size_t>(bd.b)].push_back(bi);
  }

  // Ring perception by bridge detection.
  m.bondInRing_.assign(static_cast<std::size_t>(nb), true);
  findBridges(n, m.bonds_, m.incident_, m.bondInRing_);
  m.atomInRing_.assign(static_cast<std::size_t>(n), false);
  for (int bi = 0; bi < nb; ++bi) {
    if (m.bondInRing_[static_cast<std::size_t>(bi)]) {
      m.atomInRing_[static_cast<std::size_t>(m.bonds_[static_cast<std::size_t>(bi)].a)] = true;
      m.atomInRing_[static_cast<std::size_t>(m.bonds_[static_cast<std::size_t>(bi)].b)] = true;
    }
  }

  // Aromatic bonds outside any ring (e.g. the biphenyl bridge written with a
  // default bond) are really single bonds.
  for (int bi = 0; bi < nb; ++bi) {
    Bond& bd = m.bonds_[static_cast<std::size_t>(bi)];
    if (bd.order == BondOrder::Aromatic && !m.bondInRing_[static_cast<std::size_t>(bi)]) {
      bd.order = BondOrder::Single;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (m.atoms_[static_cast<std::size_t>(i)].aromatic &&
        !m.atomInRing_[static_cast<std::size_t>(i)]) {
      throw MoleculeError("aromatic atom " + std::to_string(i) + " is not in a ring");
    }
  }

  // Hydrogen counts. Aromatic organic-subset atoms reserve one slot for the
  // ring double bond: H = max(0, minValence - sigma - 1).
  m.implicitH_.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> sigmaSum(static_cast<std::size_t>(n), 0);
  for (int bi = 0; bi < nb; ++bi) {
    const Bond& bd = m.bonds_[static_cast<std::size_t>(bi)];
    int v = bondOrderValue(bd.order);
    sigmaSum[static_cast<std::size_t>(bd.a)] += v;
    sigmaSum[static_cast<std::size_t>(bd.b)] += v;
  }
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atoms_[static_cast<std::size_t>(i)];
    if (a.explicitHCount || a.element == Element::Wildcard) continue;
    int sum = sigmaSum[static_cast<std::size_t>(i)];
    if (a.aromatic) {
      auto smallest = smallestValenceAtLeast(a.element, a.formalCharge, sum);
      int minV = smallest.value_or(sum);
      m.implicitH_[static_cast<std::size_t>(i)] = std::max(0, minV - sum - 1);
    } else {
      auto v = smallestValenceAtLeast(a.element, a.formalCharge, sum);
      m.implicitH_[static_cast<std::size_t>(i)] = v ? std::max(0, *v - sum) : 0;
    }
  }

  // Kekulization: decide which aromatic atoms need a ring double bond, then
  // find a perfect matching on them over the aromatic bonds.
  m.kekulized_.assign(static_cast<std::size_t>(nb), 0);
  for (int bi = 0; bi < nb; ++bi) {
    m.kekulized_[static_cast<std::size_t>(bi)] =
        bondOrderValue(m.bonds_[static_cast<std::size_t>(bi)].order);
  }

  std::vector<int> needsAtoms;
  std::vector<bool> needs(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atoms_[static_cast<std::size_t>(i)];
    if (!a.aromatic) continue;
    bool hasExocyclicMultiple = false;
    for (int bi : m.incident_[static_cast<std::size_t>(i)]) {
      const Bond& bd = m.bonds_[static_cast<std::size_t>(bi)];
      if (bd.order == BondOrder::Double || bd.order == BondOrder::Triple) {
        hasExocyclicMultiple = true;
      }
    }
    int base = sigmaSum[static_cast<std::size_t>(i)] +
               a.explicitHCount.value_or(m.implicitH_[static_cast<std::size_t>(i)]);
    if (hasExocyclicMultiple) continue;
    auto v = smallestValenceAtLeast(a.element, a.formalCharge, base);
    if (!v) {
      throw MoleculeError("kekulization failed: aromatic atom " + std::to_string(i) +
                          " exceeds every allowed valence");
    }
    int gap = *v - base;
    if (gap == 0) continue;
    if (gap == 1) {
      needs[static_cast<std::size_t>(i)] = true;
      needsAtoms.push_back(i);
    } else {
      throw MoleculeError("kekulization failed: aromatic atom " + std::to_string(i) +
                          " cannot be satisfied by one double bond");
    }
  }

  if (!needsAtoms.empty()) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int bi = 0; bi < nb; ++bi) {
      const Bond& bd = m.bonds_[static_cast<std::size_t>(bi)];
      if (bd.order != BondOrder::Aromatic) continue;
      if (needs[static_cast<std::size_t>(bd.a)] && needs[static_cast<std::size_t>(bd.b)]) {
        adj[static_cast<std::size_t>(bd.a)].push_back({bd.b, bi});
        adj[static_cast<std::size_t>(bd.b)].push_back({bd.a, bi});
      }
    }
    std::vector<int> matchedBond;
    std::vector<bool> matched(static_cast<std::size_t>(n), false);
    if (!kekulizeComponent(needsAtoms, adj, matchedBond, matched)) {
      throw MoleculeError("kekulization failed: no alternating bond assignment");
    }
    for (int bi : matchedBond) m.kekulized_[static_cast<std::size_t>(bi)] = 2;
  }

  // Components.
  m.componentCount_ = componentScan(n, m.incident_, m.bonds_, m.componentLabel_);

  if (options.requireValid) {
    auto violations = m.valenceViolations();
    if (!violations.empty()) {
      throw MoleculeError(violations.front().message);
    }
  }
  return m;
}

int connectedComponents(const Molecule& m, std::vector<int>* labels) {
  if (labels) {
    *labels = m.componentLabels();
  }
  return m.componentCount();
}

}  // namespace toolmol
