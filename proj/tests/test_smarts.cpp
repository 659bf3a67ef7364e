// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toolmol/smarts.hpp"
#include "toolmol/smiles.hpp"

using namespace toolmol;

TEST_CASE("element patterns match aliphatic vs aromatic strictly") {
  Molecule toluene = parseSmiles("Cc1ccccc1");
  auto aliphaticC = SmartsPattern::parse("C");
  auto aromaticC = SmartsPattern::parse("c");
  CHECK(aliphaticC.matchSets(toluene).size() == 1);
  CHECK(aromaticC.matchSets(toluene).size() == 6);

  auto anyAtom = SmartsPattern::parse("*");
  CHECK(anyAtom.matchSets(toluene).size() == 7);
}

TEST_CASE("multi-atom patterns and bond predicates") {
  Molecule m = parseSmiles("CC(=O)O");  // acetic acid
  CHECK(SmartsPattern::parse("C=O").matchSets(m).size() == 1);
  CHECK(SmartsPattern::parse("C-O").matchSets(m).size() == 1);
  CHECK(SmartsPattern::parse("O").matchSets(m).size() == 2);
  // Carboxyl as a three-atom pattern: one match set.
  CHECK(SmartsPattern::parse("OC=O").matchSets(m).size() == 1);

  Molecule alkyne = parseSmiles("CC#N");
  CHECK(SmartsPattern::parse("C#N").matchSets(alkyne).size() == 1);
  CHECK(SmartsPattern::parse("C=N").matchSets(alkyne).empty());
}

TEST_CASE("default bond means single-or-aromatic") {
  Molecule benzene = parseSmiles("c1ccccc1");
  // "cc" with default bond matches each aromatic bond once as a set.
  CHECK(SmartsPattern::parse("cc").matchSets(benzene).size() == 6);

  Molecule ethene = parseSmiles("C=C");
  CHECK(SmartsPattern::parse("CC").matchSets(ethene).empty());
  CHECK(SmartsPattern::parse("C=C").matchSets(ethene).size() == 1);
}

TEST_CASE("bracket predicates: H count, degree, charge") {
  Molecule ethanolamine = parseSmiles("OCCN");
  auto oh = SmartsPattern::parse("[OH]");
  auto matches = oh.matchSets(ethanolamine);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0] == std::vector<int>{0});

  auto nh2 = SmartsPattern::parse("[NH2]");
  CHECK(nh2.matchSets(ethanolamine).size() == 1);

  auto degree2 = SmartsPattern::parse("[D2]");
  CHECK(degree2.matchSets(ethanolamine).size() == 2);  // the two carbons

  Molecule carboxylate = parseSmiles("CC(=O)[O-]");
  CHECK(SmartsPattern::parse("[O-]").matchSets(carboxylate).size() == 1);
  CHECK(SmartsPattern::parse("[OH]").matchSets(carboxylate).empty());

  // Combined primitives AND together.
  Molecule m = parseSmiles("CN(C)C");
  CHECK(SmartsPattern::parse("[ND3]").matchSets(m).size() == 1);
  CHECK(SmartsPattern::parse("[ND2]").matchSets(m).empty());
}

TEST_CASE("ring closure patterns") {
  Molecule cyclohexane = parseSmiles("C1CCCCC1");
  auto sixRing = SmartsPattern::parse("C1CCCCC1");
  CHECK(sixRing.matchSets(cyclohexane).size() == 1);

  Molecule benzene = parseSmiles("c1ccccc1");
  CHECK(SmartsPattern::parse("c1ccccc1").matchSets(benzene).size() == 1);
  CHECK(sixRing.matchSets(benzene).empty());
}

TEST_CASE("anchored matching filters by contained atom") {
  Molecule m = parseSmiles("OCCO");  // two hydroxyls
  auto o = SmartsPattern::parse("O");
  CHECK(o.matchSets(m).size() == 2);
  auto anchored = o.matchSetsContaining(m, 0);
  REQUIRE(anchored.size() == 1);
  CHECK(anchored[0] == std::vector<int>{0});
  CHECK(o.matchSetsContaining(m, 1).empty());
}

TEST_CASE("unsupported primitives are rejected with position") {
  CHECK_THROWS_AS(SmartsPattern::parse(""), SmartsError);
  CHECK_THROWS_AS(SmartsPattern::parse("[OX2]"), SmartsError);
  CHECK_THROWS_AS(SmartsPattern::parse("[C;H2]"), SmartsError);
  CHECK_THROWS_AS(SmartsPattern::parse("C1CC"), SmartsError);
  CHECK_THROWS_AS(SmartsPattern::parse("[Si]"), SmartsError);
  CHECK_THROWS_AS(SmartsPattern::parse("C(("), SmartsError);

  try {
    SmartsPattern::parse("[OX2]");
    FAIL("expected throw");
  } catch (const SmartsError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("matches are injective: no atom reused within one match") {
  Molecule propane = parseSmiles("CCC");
  // Pattern CC: sets {0,1} and {1,2}, not {0,0}.
  auto cc = SmartsPattern::parse("CC");
  auto sets = cc.matchSets(propane);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == std::vector<int>{0, 1});
  CHECK(sets[1] == std::vector<int>{1, 2});
}
