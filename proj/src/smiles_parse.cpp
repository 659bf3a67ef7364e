// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <map>
#include <optional>
#include <string>

#include "toolmol/smiles.hpp"

namespace toolmol {

namespace {

struct RingBondState {
  int atom;
  std::optional<BondOrder> order;
  std::size_t position;
};

class Parser {
 public:
  Parser(std::string_view text, const SmilesOptions& options)
      : text_(text), options_(options) {}

  Molecule run() {
    if (text_.empty()) throw SmilesError("empty SMILES", 0);
    parseChain();
    if (!openRings_.empty()) {
      throw SmilesError("unmatched ring closure " + std::to_string(openRings_.begin()->first),
                        openRings_.begin()->second.position);
    }
    if (!branchStack_.empty()) throw SmilesError("unclosed branch", pos_);

    MoleculeBuilder::BuildOptions buildOptions;
    buildOptions.allowMarkers = options_.allowMarkers;
    try {
      Molecule m = builder_.build(buildOptions);
      if (!options_.allowMultiComponent && m.componentCount() > 1) {
        throw SmilesError("disconnected input not allowed here", 0);
      }
      return m;
    } catch (const MoleculeError& e) {
      throw SmilesError(e.what(), 0);
    }
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { throw SmilesError(msg, pos_); }

  void parseChain() {
    while (!done()) {
      char c = peek();
      if (c == '(') {
        ++pos_;
        if (prevAtom_ < 0) fail("branch before any atom");
        branchStack_.push_back(prevAtom_);
      } else if (c == ')') {
        ++pos_;
        if (branchStack_.empty()) fail("unmatched ')'");
        prevAtom_ = branchStack_.back();
        branchStack_.pop_back();
      } else if (c == '.') {
        ++pos_;
        if (!options_.allowMultiComponent) fail("'.' not allowed here");
        if (pendingBond_) fail("bond symbol before '.'");
        prevAtom_ = -1;
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        ++pos_;
        if (pendingBond_) fail("two consecutive bond symbols");
        pendingBond_ = bondFromSymbol(c);
      } else if (c == '/' || c == '\\') {
        fail("stereo bond symbols are not supported");
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        parseRingClosure();
      } else {
        parseAtom();
      }
    }
    if (pendingBond_) fail("dangling bond symbol");
  }

  static BondOrder bondFromSymbol(char c) {
    switch (c) {
      case '-': return BondOrder::Single;
      case '=': return BondOrder::Double;
      case '#': return BondOrder::Triple;
      default: return BondOrder::Aromatic;
    }
  }

  void parseRingClosure() {
    std::size_t at = pos_;
    int number;
    if (peek() == '%') {
      ++pos_;
      if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("'%' needs two digits");
      int d1 = take() - '0';
      if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("'%' needs two digits");
      int d2 = take() - '0';
      number = d1 * 10 + d2;
    } else {
      number = take() - '0';
    }
    if (prevAtom_ < 0) throw SmilesError("ring closure before any atom", at);

    auto bondSpec = pendingBond_;
    pendingBond_.reset();

    auto it = openRings_.find(number);
    if (it == openRings_.end()) {
      openRings_[number] = {prevAtom_, bondSpec, at};
      return;
    }
    RingBondState open = it->second;
    openRings_.erase(it);
    if (open.atom == prevAtom_) throw SmilesError("ring closure to same atom", at);
    if (open.order && bondSpec && *open.order != *bondSpec) {
      throw SmilesError("conflicting ring-closure bond orders", at);
    }
    BondOrder order = open.order ? *open.order
                     : bondSpec ? *bondSpec
                                : defaultBond(open.atom, prevAtom_);
    try {
      builder_.addBond(open.atom, prevAtom_, order);
    } catch (const MoleculeError& e) {
      throw SmilesError(e.what(), at);
    }
  }

  BondOrder defaultBond(int a, int b) const {
    if (builder_.atom(a).aromatic && builder_.atom(b).aromatic) return BondOrder::Aromatic;
    return BondOrder::Single;
  }

  void attach(int newAtom, std::size_t at) {
    if (prevAtom_ >= 0) {
      BondOrder order = pendingBond_ ? *pendingBond_ : defaultBond(prevAtom_, newAtom);
      try {
        builder_.addBond(prevAtom_, newAtom, order);
      } catch (const MoleculeError& e) {
        throw SmilesError(e.what(), at);
      }
    } else if (pendingBond_) {
      throw SmilesError("bond symbol with no preceding atom", at);
    }
    pendingBond_.reset();
    prevAtom_ = newAtom;
  }

  void parseAtom() {
    std::size_t at = pos_;
    char c = peek();
    if (c == '[') {
      parseBracketAtom();
      return;
    }

    // Organic subset, two-character symbols first.
    Atom atom;
    if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
      pos_ += 2;
      atom.element = Element::Cl;
    } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
      pos_ += 2;
      atom.element = Element::Br;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      auto e = elementFromSymbol(std::string_view(&text_[pos_], 1));
      if (!e) fail("unsupported element '" + std::string(1, c) + "'");
      ++pos_;
      atom.element = *e;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = elementFromSymbol(std::string_view(&upper, 1));
      if (!e || !aromaticCapable(*e)) fail("unsupported aromatic atom '" + std::string(1, c) + "'");
      ++pos_;
      atom.element = *e;
      atom.aromatic = true;
    } else if (c == '*') {
      fail("'*' must be written in brackets");
    } else if (c == '@') {
      fail("stereochemistry is not supported");
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    attach(builder_.addAtom(atom), at);
  }

  void parseBracketAtom() {
    std::size_t at = pos_;
    ++pos_;  // '['
    if (done()) fail("unterminated bracket atom");

    Atom atom;
    char c = peek();

    if (std::isdigit(static_cast<unsigned char>(c))) {
      // [13C] style isotopes; also catches [1*] marker labels.
      std::size_t digitStart = pos_;
      int value = 0;
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (take() - '0');
      }
      if (!done() && peek() == '*') {
        ++pos_;
        atom.element = Element::Wildcard;
        atom.markerLabel = value;
        atom.explicitHCount = 0;
        finishBracket(atom, at);
        return;
      }
      throw SmilesError("isotopes are not supported", digitStart);
    }

    if (c == '*') {
      ++pos_;
      atom.element = Element::Wildcard;
      atom.markerLabel = 0;
      atom.explicitHCount = 0;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        int value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          value = value * 10 + (take() - '0');
        }
        atom.markerLabel = value;
      }
      finishBracket(atom, at);
      return;
    }

    // Element symbol. Inside brackets the symbol is unambiguous, so consume
    // every trailing lowercase letter except 'H' (the hydrogen-count marker
    // can only follow a complete symbol).
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t symStart = pos_;
      std::string sym(1, take());
      while (!done() && std::islower(static_cast<unsigned char>(peek())) &&
             sym.size() < 3) {
        sym += take();
      }
      auto e = elementFromSymbol(sym);
      if (!e) throw SmilesError("unsupported element '" + sym + "'", symStart);
      atom.element = *e;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = elementFromSymbol(std::string_view(&upper, 1));
      if (!e || !aromaticCapable(*e)) fail("unsupported aromatic atom '" + std::string(1, c) + "'");
      ++pos_;
      atom.element = *e;
      atom.aromatic = true;
    } else {
      fail("expected element symbol in brackets");
    }

    atom.explicitHCount = 0;
    finishBracket(atom, at);
  }

  // Parses H-count, charge and ']' for a bracket atom, then attaches it.
  void finishBracket(Atom atom, std::size_t at) {
    while (!done() && peek() != ']') {
      char c = peek();
      if (c == 'H') {
        ++pos_;
        int count = 1;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          count = take() - '0';
        }
        atom.explicitHCount = count;
      } else if (c == '+' || c == '-') {
        int sign = (c == '+') ? 1 : -1;
        ++pos_;
        int magnitude = 1;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          magnitude = take() - '0';
        } else {
          while (!done() && peek() == c) {
            ++pos_;
            ++magnitude;
          }
        }
        atom.formalCharge = sign * magnitude;
      } else if (c == '@') {
        fail("stereochemistry is not supported");
      } else if (c == ':') {
        fail("atom maps are not supported");
      } else {
        fail("unexpected '" + std::string(1, c) + "' in bracket atom");
      }
    }
    if (done()) fail("unterminated bracket atom");
    ++pos_;  // ']'

    if (atom.element == Element::Wildcard && !options_.allowMarkers) {
      throw SmilesError("attachment markers not allowed here", at);
    }
    attach(builder_.addAtom(atom), at);
  }

  std::string_view text_;
  SmilesOptions options_;
  std::size_t pos_ = 0;
  MoleculeBuilder builder_;
  int prevAtom_ = -1;
  std::optional<BondOrder> pendingBond_;
  std::vector<int> branchStack_;
  std::map<int, RingBondState> openRings_;
};

}  // namespace

Molecule parseSmiles(std::string_view text, const SmilesOptions& options) {
  return Parser(text, options).run();
}

std::string canonicalSmiles(std::string_view text) {
  return writeSmiles(parseSmiles(text));
}

}  // namespace toolmol
