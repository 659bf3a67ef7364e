// SPDX-License-Identifier: Apache-2.0

#include "toolmol/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "toolmol/hash.hpp"

namespace toolmol {

namespace {

bool isHalogen(Element e) {
  return e == Element::F || e == Element::Cl || e == Element::Br || e == Element::I;
}

bool hasKekulizedDouble(const Molecule& m, int atom) {
  for (int bi : m.incidentBonds(atom)) {
    if (m.kekulizedOrder(bi) >= 2) return true;
  }
  return false;
}

// Amide: single C-N bond where the carbon carries a double bond to oxygen.
bool isAmideBond(const Molecule& m, const Bond& bd) {
  for (int twice = 0; twice < 2; ++twice) {
    int c = twice == 0 ? bd.a : bd.b;
    int n = twice == 0 ? bd.b : bd.a;
    if (m.atom(c).element != Element::C || m.atom(n).element != Element::N) continue;
    for (int bi : m.incidentBonds(c)) {
      const Bond& other = m.bond(bi);
      if (m.kekulizedOrder(bi) == 2 &&
          m.atom(other.other(c)).element == Element::O) {
        return true;
      }
    }
  }
  return false;
}

// Connected components of the subgraph induced by in-ring bonds.
int ringSystemCount(const Molecule& m) {
  const int n = m.atomCount();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int systems = 0;
  for (int start = 0; start < n; ++start) {
    if (!m.atomInRing(start) || label[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> stack{start};
    label[static_cast<std::size_t>(start)] = systems;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int bi : m.incidentBonds(a)) {
        if (!m.bondInRing(bi)) continue;
        int to = m.bond(bi).other(a);
        if (label[static_cast<std::size_t>(to)] == -1) {
          label[static_cast<std::size_t>(to)] = systems;
          stack.push_back(to);
        }
      }
    }
    ++systems;
  }
  return systems;
}

}  // namespace

DescriptorSet computeDescriptors(const Molecule& m) {
  DescriptorSet d;
  const int n = m.atomCount();

  int carbons = 0, nitrogens = 0, oxygens = 0, halogens = 0;
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atom(i);
    d.molecularWeight += atomicWeight(a.element);
    d.molecularWeight += hydrogenWeight() * m.totalHydrogens(i);
    ++d.heavyAtomCount;
    switch (a.element) {
      case Element::C: ++carbons; break;
      case Element::N: ++nitrogens; break;
      case Element::O: ++oxygens; break;
      default:
        if (isHalogen(a.element)) ++halogens;
        break;
    }

    bool isNO = a.element == Element::N || a.element == Element::O;
    if (isNO && m.totalHydrogens(i) >= 1) ++d.hBondDonors;
    if (isNO) {
      bool pyrroleType = a.element == Element::N && a.aromatic && !hasKekulizedDouble(m, i);
      bool positive = a.formalCharge > 0;
      if (!pyrroleType && !positive) ++d.hBondAcceptors;
    }
  }

  d.ringCount = m.bondCount() - n + m.componentCount();

  // Cycle rank of the aromatic-bond subgraph.
  {
    int aromaticBonds = 0;
    std::vector<bool> touched(static_cast<std::size_t>(n), false);
    for (const Bond& bd : m.bonds()) {
      if (bd.order == BondOrder::Aromatic) {
        ++aromaticBonds;
        touched[static_cast<std::size_t>(bd.a)] = true;
        touched[static_cast<std::size_t>(bd.b)] = true;
      }
    }
    int aromaticAtoms = static_cast<int>(std::count(touched.begin(), touched.end(), true));
    if (aromaticBonds > 0) {
      // Components of the aromatic subgraph.
      std::vector<int> label(static_cast<std::size_t>(n), -1);
      int comps = 0;
      for (int start = 0; start < n; ++start) {
        if (!touched[static_cast<std::size_t>(start)] ||
            label[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> stack{start};
        label[static_cast<std::size_t>(start)] = comps;
        while (!stack.empty()) {
          int a = stack.back();
          stack.pop_back();
          for (int bi : m.incidentBonds(a)) {
            if (m.bond(bi).order != BondOrder::Aromatic) continue;
            int to = m.bond(bi).other(a);
            if (label[static_cast<std::size_t>(to)] == -1) {
              label[static_cast<std::size_t>(to)] = comps;
              stack.push_back(to);
            }
          }
        }
        ++comps;
      }
      d.aromaticRingCount = aromaticBonds - aromaticAtoms + comps;
    }
  }

  for (int bi = 0; bi < m.bondCount(); ++bi) {
    const Bond& bd = m.bond(bi);
    if (bd.order != BondOrder::Single || m.bondInRing(bi)) continue;
    auto heavyDegree = [&](int atom) { return m.degree(atom); };
    if (heavyDegree(bd.a) < 2 || heavyDegree(bd.b) < 2) continue;
    if (isAmideBond(m, bd)) continue;
    ++d.rotatableBonds;
  }

  d.logPProxy = 0.5 * carbons - 0.7 * (nitrogens + oxygens) + 0.3 * halogens;
  d.tpsaProxy = 20.0 * nitrogens + 17.0 * oxygens;
  return d;
}

std::vector<double> betweennessCentrality(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);
  if (n < 3) return centrality;

  // Brandes accumulation over BFS shortest-path DAGs.
  for (int source = 0; source < n; ++source) {
    std::vector<int> order;
    std::vector<std::vector<int>> predecessors(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    sigma[static_cast<std::size_t>(source)] = 1.0;
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      order.push_back(v);
      for (int w : adjacency[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push(w);
        }
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] + 1) {
          sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
          predecessors[static_cast<std::size_t>(w)].push_back(v);
        }
      }
    }
    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int v : predecessors[static_cast<std::size_t>(w)]) {
        delta[static_cast<std::size_t>(v)] +=
            sigma[static_cast<std::size_t>(v)] / sigma[static_cast<std::size_t>(w)] *
            (1.0 + delta[static_cast<std::size_t>(w)]);
      }
      if (w != source) centrality[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
    }
  }

  // Undirected double-counting plus pair normalization.
  const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& c : centrality) c /= norm;
  return centrality;
}

std::vector<double> betweennessCentrality(const Molecule& m) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(m.atomCount()));
  for (int i = 0; i < m.atomCount(); ++i) adjacency[static_cast<std::size_t>(i)] = m.neighbors(i);
  return betweennessCentrality(adjacency);
}

int Fingerprint::popcount() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

Fingerprint fingerprint(const Molecule& m, int width, int radius) {
  Fingerprint fp(width);
  const int n = m.atomCount();
  if (n == 0) return fp;

  std::vector<std::uint64_t> env(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atom(i);
    std::uint64_t h = fnv1a(elementSymbol(a.element));
    h = hashCombine(h, static_cast<std::uint64_t>(m.degree(i)));
    h = hashCombine(h, static_cast<std::uint64_t>(a.formalCharge + 8));
    h = hashCombine(h, a.aromatic ? 1u : 0u);
    h = hashCombine(h, m.atomInRing(i) ? 1u : 0u);
    env[static_cast<std::size_t>(i)] = h;
    fp.set(static_cast<int>(h % static_cast<std::uint64_t>(width)));
  }

  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> nbrs;
      for (int bi : m.incidentBonds(i)) {
        const Bond& bd = m.bond(bi);
        std::uint64_t b = hashCombine(static_cast<std::uint64_t>(bd.order),
                                      env[static_cast<std::size_t>(bd.other(i))]);
        nbrs.push_back(b);
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::uint64_t h = env[static_cast<std::size_t>(i)];
      for (std::uint64_t b : nbrs) h = hashCombine(h, b);
      next[static_cast<std::size_t>(i)] = h;
      fp.set(static_cast<int>(h % static_cast<std::uint64_t>(width)));
    }
    env = std::move(next);
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("fingerprint width mismatch");
  }
  int both = 0, either = 0;
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    bool x = a.bits_[i], y = b.bits_[i];
    if (x && y) ++both;
    if (x || y) ++either;
  }
  if (either == 0) return 1.0;
  return static_cast<double>(both) / static_cast<double>(either);
}

double surrogateQed(const DescriptorSet& d) {
  auto gauss = [](double x) { return std::exp(-x * x); };
  double dMW = gauss((d.molecularWeight - 300.0) / 150.0);
  double dRot = gauss(d.rotatableBonds / 10.0);
  double dRing = gauss((d.ringCount - 2.0) / 2.0);
  double dPolar = gauss((d.hBondDonors + d.hBondAcceptors - 4.0) / 4.0);
  return std::pow(dMW * dRot * dRing * dPolar, 0.25);
}

double surrogateSa(const Molecule& m, const DescriptorSet& d) {
  int fusedOrSpiroPairs = std::max(0, d.ringCount - ringSystemCount(m));
  double sa = 1.0 + 0.04 * d.heavyAtomCount + 0.7 * std::max(0, d.ringCount - 3) +
              0.5 * fusedOrSpiroPairs + 1.5 * (m.componentCount() > 1 ? 1.0 : 0.0);
  return std::clamp(sa, 1.0, 10.0);
}

}  // namespace toolmol
