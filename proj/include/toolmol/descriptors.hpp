// SPDX-License-Identifier: Apache-2.0

#ifndef TOOLMOL_DESCRIPTORS_HPP
#define TOOLMOL_DESCRIPTORS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "toolmol/molecule.hpp"

namespace toolmol {

struct DescriptorSet {
  double molecularWeight = 0.0;
  int heavyAtomCount = 0;
  int ringCount = 0;  // cycle rank: bonds - atoms + components
  int aromaticRingCount = 0;
  int hBondDonors = 0;
  int hBondAcceptors = 0;
  int rotatableBonds = 0;
  double logPProxy = 0.0;
  double tpsaProxy = 0.0;
};

// Deterministic graph-derived descriptors.
//   donor      = N/O carrying at least one hydrogen
//   acceptor   = N/O, excluding pyrrole-type aromatic N (lone pair in the
//                ring, i.e. no kekulized double bond) and positively charged
//                N/O
//   rotatable  = acyclic single bond between heavy atoms of heavy-degree >= 2,
//                excluding amide C-N
//   logPProxy  = 0.5*C - 0.7*(N+O) + 0.3*halogens      (documented surrogate)
//   tpsaProxy  = 20*N + 17*O                            (documented surrogate)
DescriptorSet computeDescriptors(const Molecule& m);

// Brandes betweenness centrality on the unweighted atom graph, normalized by
// (n-1)(n-2)/2; all zeros for n < 3.
std::vector<double> betweennessCentrality(const Molecule& m);
// Same, on a plain adjacency list (used by the randomized test oracle too).
std::vector<double> betweennessCentrality(const std::vector<std::vector<int>>& adjacency);

class Fingerprint {
 public:
  explicit Fingerprint(int width = 2048) : bits_(static_cast<std::size_t>(width), false) {}

  int width() const { return static_cast<int>(bits_.size()); }
  void set(int bit) { bits_[static_cast<std::size_t>(bit)] = true; }
  bool test(int bit) const { return bits_[static_cast<std::size_t>(bit)]; }
  int popcount() const;

  bool operator==(const Fingerprint& other) const { return bits_ == other.bits_; }

  friend double tanimoto(const Fingerprint& a, const Fingerprint& b);

 private:
  std::vector<bool> bits_;
};

// Circular environments of radius 0..2, keyed on
// (element, degree, charge, aromatic, ring), each hashed to one of 2048 bits.
Fingerprint fingerprint(const Molecule& m, int width = 2048, int radius = 2);

// |a AND b| / |a OR b|; 1.0 when both empty. Throws on width mismatch.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

// Drug-likeness surrogate in [0,1]: geometric mean of Gaussian desirability
// terms for weight, rotatable bonds, ring count and polar-atom count.
double surrogateQed(const DescriptorSet& d);

// Synthesizability surrogate in [1,10]; grows with size, ring excess,
// fused/spiro ring pairs and fragmentation.
double surrogateSa(const Molecule& m, const DescriptorSet& d);

}  // namespace toolmol

#endif
