#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blp/model.hpp"

using namespace blp;

static ResolvedConfig cfg22() {
  ModelConfig mc;
  mc.p = 2;
  mc.I = 2;
  mc.J = 2;
  return resolve(mc);
}

TEST_CASE("defaults fill the truncation exponents") {
  auto r = cfg22();
  CHECK(r.C == 4);
  CHECK(r.A == 4);
  CHECK(r.B == 4);
  AtomSpace atoms(r);
  CHECK(atoms.atom_count() == 4096);
}

TEST_CASE("validation rejects bad configs") {
  ModelConfig mc;
  mc.p = 4;
  CHECK_THROWS_AS(resolve(mc), std::invalid_argument);
  mc.p = 2;
  mc.I = -1;
  CHECK_THROWS_AS(resolve(mc), std::invalid_argument);
  mc.I = 2;
  mc.J = 2;
  mc.A = 1;  // smaller than I
  CHECK_THROWS_AS(resolve(mc), std::invalid_argument);
  mc.A.reset();
  mc.C = 10;  // C > A + B with defaults recomputed? set all three
  mc.A = 2;
  mc.B = 2;
  CHECK_THROWS_AS(resolve(mc), std::invalid_argument);
}

TEST_CASE("index round trip is lexicographic") {
  AtomSpace atoms(cfg22());
  for (std::size_t k : {std::size_t(0), std::size_t(17), std::size_t(4095)}) {
    CHECK(atoms.index(atoms.element(k)) == k);
  }
  // w varies fastest
  CHECK(atoms.element(1).w == 1);
  CHECK(atoms.element(1).u == 0);
}

TEST_CASE("group law") {
  ModelConfig mc;
  mc.p = 3;
  mc.I = 1;
  mc.J = 1;
  AtomSpace atoms(resolve(mc));
  GroupElement id{0, 0, 0};
  for (std::size_t k = 0; k < atoms.atom_count(); k += 7) {
    GroupElement g = atoms.element(k);
    CHECK(atoms.mul(g, atoms.inverse(g)) == id);
    CHECK(atoms.mul(atoms.inverse(g), g) == id);
    CHECK(atoms.mul(g, id) == g);
  }
  // associativity on a sample
  for (std::size_t a = 0; a < atoms.atom_count(); a += 97)
    for (std::size_t b = 1; b < atoms.atom_count(); b += 131)
      for (std::size_t c = 2; c < atoms.atom_count(); c += 173) {
        GroupElement x = atoms.element(a), y = atoms.element(b), z = atoms.element(c);
        CHECK(atoms.mul(atoms.mul(x, y), z) == atoms.mul(x, atoms.mul(y, z)));
      }
  // the twist: (1,0,0)(0,1,0) and (0,1,0)(1,0,0) differ in w
  GroupElement x{1, 0, 0}, y{0, 1, 0};
  CHECK(atoms.mul(x, y).w == 1);
  CHECK(atoms.mul(y, x).w == 0);
}

TEST_CASE("measures") {
  AtomSpace atoms(cfg22());
  CHECK(atoms.atom_measure() == Rational(1, 4096));
  CHECK(atoms.cell_measure(atoms.atom_count()) == 1);

  ModelConfig mc;
  mc.p = 2;
  mc.i0 = 1;
  mc.j0 = 1;
  mc.I = 2;
  mc.J = 2;
  AtomSpace shifted{resolve(mc)};
  // box measure p^{-2(i0+j0)} = 1/16
  CHECK(shifted.cell_measure(shifted.atom_count()) == Rational(1, 16));
}

TEST_CASE("metadata json mentions the resolved exponents") {
  AtomSpace atoms(cfg22());
  auto s = atoms.metadata_json();
  CHECK(s.find("\"atom_count\":4096") != std::string::npos);
  CHECK(s.find("\"A\":4") != std::string::npos);
}
