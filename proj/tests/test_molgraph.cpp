// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "toolmol/molecule.hpp"
#include "toolmol/smiles.hpp"

using namespace toolmol;
using namespace toolmol::testsupport;

TEST_CASE("methane parses to a single carbon with four hydrogens") {
  Molecule m = parseSmiles("C");
  CHECK(m.atomCount() == 1);
  CHECK(m.atom(0).element == Element::C);
  CHECK(m.totalHydrogens(0) == 4);
  CHECK(m.componentCount() == 1);
  CHECK(m.valenceViolations().empty());
}

TEST_CASE("benzene: aromatic ring, one hydrogen per atom, kekulizable") {
  Molecule m = parseSmiles("c1ccccc1");
  REQUIRE(m.atomCount() == 6);
  REQUIRE(m.bondCount() == 6);
  int doubles = 0;
  for (int i = 0; i < 6; ++i) {
    CHECK(m.atom(i).aromatic);
    CHECK(m.atomInRing(i));
    CHECK(m.totalHydrogens(i) == 1);
    CHECK(m.bondOrderSum(i) + m.totalHydrogens(i) == 4);
  }
  for (int bi = 0; bi < 6; ++bi) {
    CHECK(m.bondInRing(bi));
    if (m.kekulizedOrder(bi) == 2) ++doubles;
  }
  CHECK(doubles == 3);  // alternating single/double
}

TEST_CASE("ring closure bookkeeping") {
  CHECK_THROWS_AS(parseSmiles("C1CC"), SmilesError);
  CHECK_NOTHROW(parseSmiles("C1CCCCC1"));
  CHECK_NOTHROW(parseSmiles("C%10CCCCC%10"));
  CHECK_THROWS_AS(parseSmiles("C11"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("C-1CCCC=1"), SmilesError);  // conflicting orders
  CHECK_NOTHROW(parseSmiles("C=1CCCC=1"));
}

TEST_CASE("bracket atoms: charges and explicit hydrogens") {
  Molecule ammonium = parseSmiles("[NH4+]");
  CHECK(ammonium.atom(0).formalCharge == 1);
  CHECK(ammonium.totalHydrogens(0) == 4);
  CHECK(ammonium.valenceViolations().empty());

  Molecule alkoxide = parseSmiles("CC[O-]");
  CHECK(alkoxide.atom(2).formalCharge == -1);
  CHECK(alkoxide.totalHydrogens(2) == 0);

  Molecule pyrrole = parseSmiles("c1cc[nH]c1");
  int nIdx = -1;
  for (int i = 0; i < pyrrole.atomCount(); ++i) {
    if (pyrrole.atom(i).element == Element::N) nIdx = i;
  }
  REQUIRE(nIdx >= 0);
  CHECK(pyrrole.totalHydrogens(nIdx) == 1);
  CHECK(pyrrole.atom(nIdx).aromatic);

  CHECK_NOTHROW(parseSmiles("[O-]C(=O)C"));
  CHECK_NOTHROW(parseSmiles("[N+](=O)([O-])c1ccccc1"));
}

TEST_CASE("unsupported features are rejected with positions") {
  CHECK_THROWS_AS(parseSmiles(""), SmilesError);
  CHECK_THROWS_AS(parseSmiles("[Si](C)(C)C"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("C/C=C/C"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("[C@H](N)(C)O"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("[13C]"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("C(("), SmilesError);
  CHECK_THROWS_AS(parseSmiles("C)"), SmilesError);
  CHECK_THROWS_AS(parseSmiles("C=="), SmilesError);

  try {
    parseSmiles("CC[Si]");
  } catch (const SmilesError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("aromatic atoms must sit in rings; kekulization must succeed") {
  CHECK_THROWS_AS(parseSmiles("cc"), SmilesError);
  // Five aromatic carbons cannot pair up.
  CHECK_THROWS_AS(parseSmiles("c1cccc1"), SmilesError);
  // Pyridine-like six-ring with N is fine.
  CHECK_NOTHROW(parseSmiles("c1ccncc1"));
}

TEST_CASE("valence violations are reported") {
  // Pentavalent carbon, constructed directly.
  MoleculeBuilder b;
  for (int i = 0; i < 6; ++i) b.addAtom({Element::C, 0, false, std::nullopt, 0});
  for (int i = 1; i < 6; ++i) b.addBond(0, i, BondOrder::Single);
  MoleculeBuilder::BuildOptions opts;
  opts.requireValid = false;
  Molecule m = b.build(opts);
  auto violations = m.valenceViolations();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].atom == 0);
  CHECK(violations[0].bondOrderSum == 5);
  CHECK(violations[0].maxAllowed == 4);

  // Same construction through build() with validation on throws.
  CHECK_THROWS_AS(b.build(), MoleculeError);
}

TEST_CASE("connected components") {
  CHECK(parseSmiles("CCO").componentCount() == 1);
  CHECK(parseSmiles("CC.O").componentCount() == 2);
  CHECK(Molecule{}.componentCount() == 0);

  MoleculeBuilder b(parseSmiles("CCO"));
  b.removeBond(1, 2);
  b.clearExplicitH(1);
  b.clearExplicitH(2);
  MoleculeBuilder::BuildOptions opts;
  Molecule split = b.build(opts);
  CHECK(split.componentCount() == 2);
}

TEST_CASE("ring perception distinguishes ring and chain atoms") {
  Molecule toluene = parseSmiles("Cc1ccccc1");
  int ringAtoms = 0;
  for (int i = 0; i < toluene.atomCount(); ++i) {
    if (toluene.atomInRing(i)) ++ringAtoms;
  }
  CHECK(ringAtoms == 6);
  CHECK_FALSE(toluene.atomInRing(0));

  Molecule chain = parseSmiles("CCO");
  for (int i = 0; i < 3; ++i) CHECK_FALSE(chain.atomInRing(i));

  // Fused bicyclic: every atom in a ring, the fusion bond too.
  Molecule naphthalene = parseSmiles("c1ccc2ccccc2c1");
  for (int i = 0; i < naphthalene.atomCount(); ++i) CHECK(naphthalene.atomInRing(i));
}

TEST_CASE("canonical writer merges isomorphic inputs") {
  CHECK(writeSmiles(parseSmiles("OCC")) == writeSmiles(parseSmiles("CCO")));
  CHECK(writeSmiles(parseSmiles("C(C)(C)C")) == writeSmiles(parseSmiles("CC(C)C")));
  CHECK(writeSmiles(parseSmiles("c1ccccc1C")) == writeSmiles(parseSmiles("Cc1ccccc1")));
}

TEST_CASE("round trips are stable and graph-preserving") {
  const std::vector<std::string> corpus = {
      "C",
      "CCO",
      "c1ccccc1",
      "Cc1ccccc1",
      "COc1ccccc1",
      "c1cc[nH]c1",
      "c1ccncc1",
      "CC(=O)Nc1ccc(O)cc1",
      "O=C(O)c1ccccc1",
      "C#N",
      "CC(C)(C)c1ccc(O)cc1",
      "[NH4+]",
      "CC[O-]",
      "C1CCCCC1",
      "C1CCOCC1",
      "N1CCNCC1",
      "c1ccc2ccccc2c1",
      "c1ccc2[nH]ccc2c1",
      "OC(=O)CC(O)(CC(=O)O)C(=O)O",
      "ClC(Cl)(Cl)Cl",
      "FC(F)(F)c1ccccc1",
      "CN1CCC[C@H]1c1cccnc1"  // stereo marker must fail, keep at end
  };
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const std::string& s = corpus[i];
    CAPTURE(s);
    Molecule first = parseSmiles(s);
    std::string once = writeSmiles(first);
    Molecule second = parseSmiles(once);
    std::string twice = writeSmiles(second);
    CHECK(once == twice);
    CHECK(isomorphic(first, second));
  }
  CHECK_THROWS_AS(parseSmiles(corpus.back()), SmilesError);
}

TEST_CASE("canonical string is invariant under atom permutation") {
  const std::vector<std::string> corpus = {
      "CC(=O)Nc1ccc(O)cc1", "c1ccc2ccccc2c1", "COc1cc(CCN)ccc1O",
      "OC(=O)c1ccccc1O",    "ClCc1ccco1",     "CC(C)NCC(O)c1ccc(O)c(O)c1",
  };
  Rng rng(20260811);
  for (const std::string& s : corpus) {
    CAPTURE(s);
    Molecule m = parseSmiles(s);
    std::string canon = writeSmiles(m);
    for (int trial = 0; trial < 25; ++trial) {
      Molecule shuffled = permuteAtoms(m, rng);
      CHECK(writeSmiles(shuffled) == canon);
    }
  }
}

TEST_CASE("multi-component parse allowed, round-trips through dot") {
  Molecule m = parseSmiles("CC.OC");
  CHECK(m.componentCount() == 2);
  std::string s = writeSmiles(m);
  CHECK(parseSmiles(s).componentCount() == 2);
}

TEST_CASE("attachment markers only parse in fragment mode") {
  CHECK_THROWS_AS(parseSmiles("[*1]O"), SmilesError);
  SmilesOptions opts;
  opts.allowMarkers = true;
  Molecule frag = parseSmiles("[*1]O", opts);
  CHECK(frag.atom(0).element == Element::Wildcard);
  CHECK(frag.atom(0).markerLabel == 1);
  CHECK(frag.hasMarkers());

  Molecule frag2 = parseSmiles("[1*]O", opts);
  CHECK(frag2.atom(0).markerLabel == 1);
}

TEST_CASE("biphenyl bridge bond demotes to single") {
  Molecule m = parseSmiles("c1ccccc1c1ccccc1");
  int bridge = -1;
  for (int bi = 0; bi < m.bondCount(); ++bi) {
    if (!m.bondInRing(bi)) bridge = bi;
  }
  REQUIRE(bridge >= 0);
  CHECK(m.bond(bridge).order == BondOrder::Single);
  CHECK(m.valenceViolations().empty());
  // And the canonical form re-parses.
  CHECK(isomorphic(m, parseSmiles(writeSmiles(m))));
}
