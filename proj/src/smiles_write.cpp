// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "toolmol/smiles.hpp"

namespace toolmol {

namespace {

template <typename T>
std::vector<int> rankValues(const std::vector<T>& values) {
  std::vector<T> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ranks[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
  }
  return ranks;
}

int classCount(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Iterated neighborhood refinement (Morgan-like). Initial invariant is
// (element, degree, charge, H-count, aromatic, ring); remaining ties are
// individualized at the lowest-index atom of the first tied class. Not a
// certified canonical labelling, but deterministic, which is the property the
// dedup key needs.
std::vector<int> canonicalRanks(const Molecule& m) {
  const int n = m.atomCount();
  if (n == 0) return {};

  std::vector<std::tuple<int, int, int, int, int, int>> initial;
  initial.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Atom& a = m.atom(i);
    initial.emplace_back(static_cast<int>(a.element), m.degree(i), a.formalCharge,
                         m.totalHydrogens(i), a.aromatic ? 1 : 0,
                         m.atomInRing(i) ? 1 : 0);
  }
  std::vector<int> colors = rankValues(initial);

  auto refine = [&]() {
    int count = classCount(colors);
    while (count < n) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(
          static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, int>> nbrs;
        for (int bi : m.incidentBonds(i)) {
          const Bond& bd = m.bond(bi);
          nbrs.emplace_back(static_cast<int>(bd.order),
                            colors[static_cast<std::size_t>(bd.other(i))]);
        }
        std::sort(nbrs.begin(), nbrs.end());
        sig[static_cast<std::size_t>(i)] = {colors[static_cast<std::size_t>(i)],
                                            std::move(nbrs)};
      }
      std::vector<int> next = rankValues(sig);
      int nextCount = classCount(next);
      colors = std::move(next);
      if (nextCount == count) break;
      count = nextCount;
    }
    return count;
  };

  int count = refine();
  while (count < n) {
    // First non-singleton class, lowest-index member.
    std::vector<int> histogram(static_cast<std::size_t>(count), 0);
    for (int c : colors) ++histogram[static_cast<std::size_t>(c)];
    int targetColor = 0;
    while (histogram[static_cast<std::size_t>(targetColor)] < 2) ++targetColor;
    int chosen = 0;
    while (colors[static_cast<std::size_t>(chosen)] != targetColor) ++chosen;

    std::vector<std::pair<int, int>> bumped(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      bumped[static_cast<std::size_t>(i)] = {colors[static_cast<std::size_t>(i)],
                                             i == chosen ? 0 : 1};
    }
    colors = rankValues(bumped);
    count = refine();
  }
  return colors;
}

// Hydrogen count the parser would derive for the bare (bracket-free) form.
int bareImplicitH(const Molecule& m, int atom) {
  const Atom& a = m.atom(atom);
  int sigma = 0;
  for (int bi : m.incidentBonds(atom)) {
    sigma += bondOrderValue(m.bond(bi).order);
  }
  if (a.aromatic) {
    auto v = smallestValenceAtLeast(a.element, 0, sigma);
    return v ? std::max(0, *v - sigma - 1) : 0;
  }
  auto v = smallestValenceAtLeast(a.element, 0, sigma);
  return v ? std::max(0, *v - sigma) : 0;
}

std::string atomToken(const Molecule& m, int atom) {
  const Atom& a = m.atom(atom);
  if (a.element == Element::Wildcard) {
    return a.markerLabel > 0 ? "[*" + std::to_string(a.markerLabel) + "]" : "[*]";
  }

  std::string sym(elementSymbol(a.element));
  if (a.aromatic) {
    for (char& c : sym) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }

  int actualH = m.totalHydrogens(atom);
  bool needBracket = a.formalCharge != 0 || actualH != bareImplicitH(m, atom);
  if (!needBracket) return sym;

  std::string out = "[" + sym;
  if (actualH == 1) {
    out += "H";
  } else if (actualH > 1) {
    out += "H" + std::to_string(actualH);
  }
  if (a.formalCharge != 0) {
    out += a.formalCharge > 0 ? "+" : "-";
    int magnitude = std::abs(a.formalCharge);
    if (magnitude > 1) out += std::to_string(magnitude);
  }
  return out + "]";
}

std::string bondSymbol(const Molecule& m, const Bond& bd) {
  switch (bd.order) {
    case BondOrder::Double:
      return "=";
    case BondOrder::Triple:
      return "#";
    case BondOrder::Aromatic:
      return "";  // default between aromatic atoms
    case BondOrder::Single:
      // Must be explicit when both ends are aromatic, else it reads back
      // as an aromatic bond.
      if (m.atom(bd.a).aromatic && m.atom(bd.b).aromatic) return "-";
      return "";
  }
  return "";
}

struct WritePlan {
  std::vector<std::vector<std::pair<int, int>>> treeChildren;  // (child, bond)
  std::vector<std::vector<int>> opensAt;   // ring bonds opening at atom
  std::vector<std::vector<int>> closesAt;  // ring bonds closing at atom
  std::vector<int> componentStarts;        // one root per component
};

WritePlan planTraversal(const Molecule& m, const std::vector<int>& ranks) {
  const int n = m.atomCount();
  WritePlan plan;
  plan.treeChildren.assign(static_cast<std::size_t>(n), {});
  plan.opensAt.assign(static_cast<std::size_t>(n), {});
  plan.closesAt.assign(static_cast<std::size_t>(n), {});

  std::vector<int> atomsByRank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) atomsByRank[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)])] = i;

  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<bool> bondUsed(static_cast<std::size_t>(m.bondCount()), false);

  auto sortedNeighbors = [&](int u) {
    std::vector<std::pair<int, int>> nbrs;  // (rank, bond)
    for (int bi : m.incidentBonds(u)) {
      nbrs.emplace_back(ranks[static_cast<std::size_t>(m.bond(bi).other(u))], bi);
    }
    std::sort(nbrs.begin(), nbrs.end());
    return nbrs;
  };

  for (int r = 0; r < n; ++r) {
    int start = atomsByRank[static_cast<std::size_t>(r)];
    if (visited[static_cast<std::size_t>(start)]) continue;
    plan.componentStarts.push_back(start);

    struct Frame {
      int atom;
      std::vector<std::pair<int, int>> nbrs;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    visited[static_cast<std::size_t>(start)] = true;
    stack.push_back({start, sortedNeighbors(start)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next >= f.nbrs.size()) {
        stack.pop_back();
        continue;
      }
      auto [nbrRank, bi] = f.nbrs[f.next++];
      if (bondUsed[static_cast<std::size_t>(bi)]) continue;
      int v = m.bond(bi).other(f.atom);
      bondUsed[static_cast<std::size_t>(bi)] = true;
      if (!visited[static_cast<std::size_t>(v)]) {
        visited[static_cast<std::size_t>(v)] = true;
        plan.treeChildren[static_cast<std::size_t>(f.atom)].emplace_back(v, bi);
        stack.push_back({v, sortedNeighbors(v)});
      } else {
        // Back edge: opens at the earlier-visited endpoint, closes here.
        plan.opensAt[static_cast<std::size_t>(v)].push_back(bi);
        plan.closesAt[static_cast<std::size_t>(f.atom)].push_back(bi);
      }
    }
  }
  return plan;
}

class Emitter {
 public:
  Emitter(const Molecule& m, const WritePlan& plan) : m_(m), plan_(plan) {
    digitOf_.assign(static_cast<std::size_t>(m.bondCount()), -1);
  }

  std::string run() {
    std::string out;
    for (std::size_t c = 0; c < plan_.componentStarts.size(); ++c) {
      if (c > 0) out += ".";
      emitAtom(plan_.componentStarts[c], out);
    }
    return out;
  }

 private:
  int allocateDigit() {
    int d = 1;
    while (usedDigits_.count(d)) ++d;
    usedDigits_.insert(d);
    return d;
  }

  static std::string digitToken(int d) {
    return d < 10 ? std::to_string(d) : "%" + std::to_string(d);
  }

  void emitAtom(int u, std::string& out) {
    out += atomToken(m_, u);
    for (int bi : plan_.closesAt[static_cast<std::size_t>(u)]) {
      out += digitToken(digitOf_[static_cast<std::size_t>(bi)]);
      usedDigits_.erase(digitOf_[static_cast<std::size_t>(bi)]);
    }
    for (int bi : plan_.opensAt[static_cast<std::size_t>(u)]) {
      int d = allocateDigit();
      digitOf_[static_cast<std::size_t>(bi)] = d;
      out += bondSymbol(m_, m_.bond(bi));
      out += digitToken(d);
    }
    const auto& children = plan_.treeChildren[static_cast<std::size_t>(u)];
    for (std::size_t i = 0; i < children.size(); ++i) {
      auto [v, bi] = children[i];
      bool last = (i + 1 == children.size());
      if (!last) out += "(";
      out += bondSymbol(m_, m_.bond(bi));
      emitAtom(v, out);
      if (!last) out += ")";
    }
  }

  const Molecule& m_;
  const WritePlan& plan_;
  std::vector<int> digitOf_;
  std::set<int> usedDigits_;
};

}  // namespace

std::string writeSmiles(const Molecule& m) {
  if (m.empty()) return "";
  std::vector<int> ranks = canonicalRanks(m);
  WritePlan plan = planTraversal(m, ranks);
  return Emitter(m, plan).run();
}

}  // namespace toolmol
