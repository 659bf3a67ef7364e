// SPDX-License-Identifier: Apache-2.0

#include "toolmol/smarts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace toolmol {

namespace {

using AtomPredicate = SmartsPattern::AtomPredicate;
using BondPredicate = SmartsPattern::BondPredicate;

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  void run(std::vector<AtomPredicate>& atoms, std::vector<SmartsPattern::PatternBond>& bonds) {
    if (text_.empty()) throw SmartsError("empty pattern", 0);
    while (!done()) {
      char c = peek();
      if (c == '(') {
        ++pos_;
        if (prev_ < 0) fail("branch before any atom");
        branches_.push_back(prev_);
      } else if (c == ')') {
        ++pos_;
        if (branches_.empty()) fail("unmatched ')'");
        prev_ = branches_.back();
        branches_.pop_back();
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        ++pos_;
        if (pending_) fail("two consecutive bond symbols");
        pending_ = fromSymbol(c);
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        parseRing();
      } else {
        parseAtom();
      }
    }
    if (pending_) fail("dangling bond symbol");
    if (!rings_.empty()) fail("unmatched ring closure");
    if (!branches_.empty()) fail("unclosed branch");
    atoms = std::move(atoms_);
    bonds = std::move(bonds_);
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw SmartsError(msg, pos_); }

  static BondPredicate fromSymbol(char c) {
    switch (c) {
      case '-': return BondPredicate::Single;
      case '=': return BondPredicate::Double;
      case '#': return BondPredicate::Triple;
      default: return BondPredicate::Aromatic;
    }
  }

  void link(int atom) {
    if (prev_ >= 0) {
      bonds_.push_back({prev_, atom, pending_.value_or(BondPredicate::SingleOrAromatic)});
    } else if (pending_) {
      fail("bond symbol with no preceding atom");
    }
    pending_.reset();
    prev_ = atom;
  }

  void parseRing() {
    int number;
    if (peek() == '%') {
      ++pos_;
      if (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        fail("'%' needs two digits");
      }
      number = (take() - '0') * 10 + (take() - '0');
    } else {
      number = take() - '0';
    }
    if (prev_ < 0) fail("ring closure before any atom");
    auto spec = pending_;
    pending_.reset();
    auto it = rings_.find(number);
    if (it == rings_.end()) {
      rings_[number] = {prev_, spec};
      return;
    }
    auto [openAtom, openSpec] = it->second;
    rings_.erase(it);
    BondPredicate pred = openSpec ? *openSpec
                         : spec  ? *spec
                                 : BondPredicate::SingleOrAromatic;
    bonds_.push_back({openAtom, prev_, pred});
  }

  void parseAtom() {
    char c = peek();
    AtomPredicate p;
    if (c == '[') {
      parseBracket(p);
    } else if (c == '*') {
      ++pos_;
    } else if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      pos_ += 2;
      p.element = Element::Cl;
      p.aromatic = false;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      pos_ += 2;
      p.element = Element::Br;
      p.aromatic = false;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      auto e = elementFromSymbol(std::string_view(&text_[pos_], 1));
      if (!e) fail("unsupported element '" + std::string(1, c) + "'");
      ++pos_;
      p.element = *e;
      p.aromatic = false;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = elementFromSymbol(std::string_view(&upper, 1));
      if (!e || !aromaticCapable(*e)) fail("unsupported aromatic atom '" + std::string(1, c) + "'");
      ++pos_;
      p.element = *e;
      p.aromatic = true;
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    atoms_.push_back(p);
    link(static_cast<int>(atoms_.size()) - 1);
  }

  void parseBracket(AtomPredicate& p) {
    ++pos_;  // '['
    bool sawPrimitive = false;
    while (!done() && peek() != ']') {
      char c = peek();
      if (c == '*') {
        ++pos_;
        sawPrimitive = true;
      } else if (c == 'H') {
        ++pos_;
        int count = 1;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) count = take() - '0';
        p.hCount = count;
        sawPrimitive = true;
      } else if (c == 'D') {
        ++pos_;
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("'D' needs a digit");
        p.degree = take() - '0';
        sawPrimitive = true;
      } else if (c == '+' || c == '-') {
        int sign = c == '+' ? 1 : -1;
        ++pos_;
        int magnitude = 1;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) magnitude = take() - '0';
        p.charge = sign * magnitude;
        sawPrimitive = true;
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        std::size_t symStart = pos_;
        std::string sym(1, take());
        if (!done() && std::islower(static_cast<unsigned char>(peek()))) {
          std::string two = sym + peek();
          if (elementFromSymbol(two)) {
            sym = two;
            ++pos_;
          }
        }
        auto e = elementFromSymbol(sym);
        if (!e) throw SmartsError("unsupported element '" + sym + "'", symStart);
        p.element = *e;
        p.aromatic = false;
        sawPrimitive = true;
      } else if (std::islower(static_cast<unsigned char>(c))) {
        char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        auto e = elementFromSymbol(std::string_view(&upper, 1));
        if (!e || !aromaticCapable(*e)) {
          fail("unsupported aromatic atom '" + std::string(1, c) + "'");
        }
        ++pos_;
        p.element = *e;
        p.aromatic = true;
        sawPrimitive = true;
      } else {
        fail("unsupported pattern primitive '" + std::string(1, c) + "'");
      }
    }
    if (done()) fail("unterminated bracket");
    ++pos_;  // ']'
    if (!sawPrimitive) fail("empty bracket atom");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<AtomPredicate> atoms_;
  std::vector<SmartsPattern::PatternBond> bonds_;
  int prev_ = -1;
  std::optional<BondPredicate> pending_;
  std::vector<int> branches_;
  std::map<int, std::pair<int, std::optional<BondPredicate>>> rings_;
};

bool atomMatches(const AtomPredicate& p, const Molecule& m, int atom) {
  const Atom& a = m.atom(atom);
  if (a.element == Element::Wildcard) return false;
  if (p.element && a.element != *p.element) return false;
  if (p.aromatic && a.aromatic != *p.aromatic) return false;
  if (p.charge && a.formalCharge != *p.charge) return false;
  if (p.hCount && m.totalHydrogens(atom) != *p.hCount) return false;
  if (p.degree && m.degree(atom) != *p.degree) return false;
  return true;
}

bool bondMatches(BondPredicate p, const Molecule& m, int bondIndex) {
  BondOrder order = m.bond(bondIndex).order;
  switch (p) {
    case BondPredicate::SingleOrAromatic:
      return order == BondOrder::Single || order == BondOrder::Aromatic;
    case BondPredicate::Single:
      return order == BondOrder::Single;
    case BondPredicate::Double:
      return order == BondOrder::Double;
    case BondPredicate::Triple:
      return order == BondOrder::Triple;
    case BondPredicate::Aromatic:
      return order == BondOrder::Aromatic;
  }
  return false;
}

// Backtracking subgraph matcher. Patterns are tiny, so no VF2 pruning.
void enumerate(const SmartsPattern& pattern, const Molecule& m,
               std::vector<std::vector<int>>& adjacency, std::vector<int>& assignment,
               std::vector<bool>& used, int depth, std::set<std::vector<int>>& found) {
  const auto& atoms = pattern.atoms();
  const int np = static_cast<int>(atoms.size());
  if (depth == np) {
    std::vector<int> sorted(assignment);
    std::sort(sorted.begin(), sorted.end());
    found.insert(sorted);
    return;
  }

  // Candidate molecule atoms: all for depth 0, else neighbors of an
  // already-assigned pattern neighbor (patterns are connected).
  std::vector<int> candidates;
  int anchorPattern = -1;
  for (const auto& pb : pattern.bonds()) {
    if (pb.a == depth && pb.b < depth) anchorPattern = pb.b;
    if (pb.b == depth && pb.a < depth) anchorPattern = pb.a;
  }
  if (anchorPattern < 0) {
    for (int i = 0; i < m.atomCount(); ++i) candidates.push_back(i);
  } else {
    candidates = adjacency[static_cast<std::size_t>(assignment[static_cast<std::size_t>(anchorPattern)])];
  }

  for (int candidate : candidates) {
    if (used[static_cast<std::size_t>(candidate)]) continue;
    if (!atomMatches(atoms[static_cast<std::size_t>(depth)], m, candidate)) continue;
    bool ok = true;
    for (const auto& pb : pattern.bonds()) {
      int other = -1;
      if (pb.a == depth && pb.b < depth) other = pb.b;
      if (pb.b == depth && pb.a < depth) other = pb.a;
      if (other < 0) continue;
      int mi = m.bondBetween(candidate, assignment[static_cast<std::size_t>(other)]);
      if (mi < 0 || !bondMatches(pb.predicate, m, mi)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assignment[static_cast<std::size_t>(depth)] = candidate;
    used[static_cast<std::size_t>(candidate)] = true;
    enumerate(pattern, m, adjacency, assignment, used, depth + 1, found);
    used[static_cast<std::size_t>(candidate)] = false;
    assignment[static_cast<std::size_t>(depth)] = -1;
  }
}

}  // namespace

SmartsPattern SmartsPattern::parse(std::string_view text) {
  SmartsPattern p;
  p.text_ = std::string(text);
  PatternParser(text).run(p.atoms_, p.bonds_);

  // Connectivity check: the matcher needs connected patterns.
  const int n = p.atomCount();
  if (n > 1) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& b : p.bonds_) {
      adj[static_cast<std::size_t>(b.a)].push_back(b.b);
      adj[static_cast<std::size_t>(b.b)].push_back(b.a);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) throw SmartsError("disconnected pattern", 0);
  }
  return p;
}

std::vector<std::vector<int>> SmartsPattern::matchSets(const Molecule& m) const {
  std::set<std::vector<int>> found;
  std::vector<int> assignment(static_cast<std::size_t>(atomCount()), -1);
  std::vector<bool> used(static_cast<std::size_t>(m.atomCount()), false);
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(m.atomCount()));
  for (int i = 0; i < m.atomCount(); ++i) adjacency[static_cast<std::size_t>(i)] = m.neighbors(i);
  enumerate(*this, m, adjacency, assignment, used, 0, found);
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> SmartsPattern::matchSetsContaining(const Molecule& m,
                                                                 int anchor) const {
  std::vector<std::vector<int>> out;
  for (auto& set : matchSets(m)) {
    if (std::binary_search(set.begin(), set.end(), anchor)) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace toolmol
