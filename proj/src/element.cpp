// SPDX-License-Identifier: Apache-2.0

#include "toolmol/element.hpp"

#include <algorithm>
#include <array>

namespace toolmol {

namespace {

struct ElementInfo {
  std::string_view symbol;
  double weight;
  std::vector<int> valences;
};

const std::array<ElementInfo, 11>& table() {
  static const std::array<ElementInfo, 11> t = {{
      {"B", 10.811, {3}},
      {"C", 12.011, {4}},
      {"N", 14.007, {3, 5}},
      {"O", 15.999, {2}},
      {"P", 30.974, {3, 5}},
      {"S", 32.06, {2, 4, 6}},
      {"F", 18.998, {1}},
      {"Cl", 35.45, {1}},
      {"Br", 79.904, {1}},
      {"I", 126.904, {1}},
      {"*", 0.0, {}},
  }};
  return t;
}

}  // namespace

std::string_view elementSymbol(Element e) {
  return table()[static_cast<std::size_t>(e)].symbol;
}

std::optional<Element> elementFromSymbol(std::string_view symbol) {
  const auto& t = table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].symbol == symbol) return static_cast<Element>(i);
  }
  return std::nullopt;
}

double atomicWeight(Element e) {
  return table()[static_cast<std::size_t>(e)].weight;
}

double hydrogenWeight() { return 1.008; }

const std::vector<int>& defaultValences(Element e) {
  return table()[static_cast<std::size_t>(e)].valences;
}

std::vector<int> allowedValences(Element e, int formalCharge) {
  if (e == Element::Wildcard) return {};
  const auto& base = defaultValences(e);
  if (formalCharge == 0) return base;

  std::vector<int> out;
  switch (e) {
    case Element::B:
      out.push_back(3 - formalCharge);
      break;
    case Element::C:
      out.push_back(4 - std::abs(formalCharge));
      break;
    case Element::N:
      // N+ is exactly tetravalent; the pentavalent neutral form does not
      // survive a charge.
      out.push_back(3 + formalCharge);
      break;
    case Element::O:
      out.push_back(2 + formalCharge);
      break;
    case Element::P:
    case Element::S:
      for (int v : base) {
        int adjusted = v + formalCharge;
        if (adjusted >= 1 && adjusted <= 6) out.push_back(adjusted);
      }
      break;
    case Element::F:
    case Element::Cl:
    case Element::Br:
    case Element::I:
      out.push_back(1 + formalCharge);
      break;
    case Element::Wildcard:
      break;
  }
  std::erase_if(out, [](int v) { return v < 0; });
  std::sort(out.begin(), out.end());
  return out;
}

int maxAllowedValence(Element e, int formalCharge) {
  auto vs = allowedValences(e, formalCharge);
  return vs.empty() ? 0 : vs.back();
}

std::optional<int> smallestValenceAtLeast(Element e, int formalCharge,
                                          int bondOrderSum) {
  for (int v : allowedValences(e, formalCharge)) {
    if (v >= bondOrderSum) return v;
  }
  return std::nullopt;
}

bool aromaticCapable(Element e) {
  switch (e) {
    case Element::B:
    case Element::C:
    case Element::N:
    case Element::O:
    case Element::P:
    case Element::S:
      return true;
    default:
      return false;
  }
}

bool organicSubset(Element e) { return e != Element::Wildcard; }

}  // namespace toolmol
