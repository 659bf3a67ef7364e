// SPDX-License-Identifier: Apache-2.0

// Shared test helpers: independent graph-isomorphism oracle, atom-order
// permutation, corpus loading. Kept apart from the library so the oracles
// stay independent of the code they check.

#ifndef TOOLMOL_TESTS_SUPPORT_HPP
#define TOOLMOL_TESTS_SUPPORT_HPP

#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "toolmol/molecule.hpp"
#include "toolmol/random.hpp"
#include "toolmol/smiles.hpp"

namespace toolmol::testsupport {

inline bool atomsCompatible(const Molecule& a, int i, const Molecule& b, int j) {
  const Atom& x = a.atom(i);
  const Atom& y = b.atom(j);
  return x.element == y.element && x.formalCharge == y.formalCharge &&
         x.aromatic == y.aromatic && a.totalHydrogens(i) == b.totalHydrogens(j) &&
         a.degree(i) == b.degree(j);
}

inline bool bondsCompatible(const Molecule& a, int bi, const Molecule& b, int bj) {
  return a.bond(bi).order == b.bond(bj).order;
}

// VF2-style backtracking isomorphism check on attributed molecular graphs.
inline bool extendMapping(const Molecule& a, const Molecule& b, std::vector<int>& map,
                          std::vector<bool>& used, int depth) {
  const int n = a.atomCount();
  if (depth == n) return true;
  for (int j = 0; j < n; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    if (!atomsCompatible(a, depth, b, j)) continue;
    bool ok = true;
    for (int bi : a.incidentBonds(depth)) {
      int other = a.bond(bi).other(depth);
      if (other >= depth) continue;  // unmapped yet
      int mappedOther = map[static_cast<std::size_t>(other)];
      int bj = b.bondBetween(j, mappedOther);
      if (bj < 0 || !bondsCompatible(a, bi, b, bj)) {
        ok = false;
        break;
      }
    }
    // Degree of already-mapped neighborhood must match exactly: count edges
    // from j into the mapped region of b.
    if (ok) {
      int aEdges = 0;
      for (int bi : a.incidentBonds(depth)) {
        if (a.bond(bi).other(depth) < depth) ++aEdges;
      }
      int bEdges = 0;
      for (int bj : b.incidentBonds(j)) {
        int other = b.bond(bj).other(j);
        for (int k = 0; k < depth; ++k) {
          if (map[static_cast<std::size_t>(k)] == other) {
            ++bEdges;
            break;
          }
        }
      }
      if (aEdges != bEdges) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(depth)] = j;
    used[static_cast<std::size_t>(j)] = true;
    if (extendMapping(a, b, map, used, depth + 1)) return true;
    used[static_cast<std::size_t>(j)] = false;
    map[static_cast<std::size_t>(depth)] = -1;
  }
  return false;
}

inline bool isomorphic(const Molecule& a, const Molecule& b) {
  if (a.atomCount() != b.atomCount() || a.bondCount() != b.bondCount()) return false;
  std::vector<int> map(static_cast<std::size_t>(a.atomCount()), -1);
  std::vector<bool> used(static_cast<std::size_t>(a.atomCount()), false);
  return extendMapping(a, b, map, used, 0);
}

// Rebuilds a molecule with atom indices shuffled.
inline Molecule permuteAtoms(const Molecule& m, Rng& rng) {
  const int n = m.atomCount();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

  MoleculeBuilder builder;
  for (int i = 0; i < n; ++i) builder.addAtom(m.atom(perm[static_cast<std::size_t>(i)]));
  for (const Bond& bd : m.bonds()) {
    builder.addBond(inverse[static_cast<std::size_t>(bd.a)], inverse[static_cast<std::size_t>(bd.b)],
                    bd.order);
  }
  MoleculeBuilder::BuildOptions opts;
  opts.allowMarkers = true;
  return builder.build(opts);
}

inline std::vector<std::string> loadCorpus(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace toolmol::testsupport

#endif
