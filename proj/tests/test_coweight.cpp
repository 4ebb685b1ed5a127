#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blp/coweight.hpp"

using namespace blp;

TEST_CASE("arithmetic and comparison") {
  Coweight a{2, 1}, b{1, 3};
  CHECK(a + b == Coweight{3, 4});
  CHECK(a - b == Coweight{1, -2});
  CHECK(a != b);
  CHECK(leq(Coweight{1, 1}, a));
  CHECK(!leq(b, a));
  CHECK(!leq(a, b));
}

TEST_CASE("root pairings") {
  Coweight l{3, 5};
  CHECK(pairing(l, Root::Alpha1) == 3);
  CHECK(pairing(l, Root::Alpha2) == 5);
  CHECK(pairing(l, Root::Alpha0) == 8);
  CHECK(level(l) == 8);
}

TEST_CASE("distance is the max norm") {
  CHECK(dist({0, 0}, {2, -3}) == 3);
  CHECK(dist({1, 1}, {1, 1}) == 0);
  CHECK(dist({-2, 4}, {1, 2}) == 3);
}

TEST_CASE("string round trip") {
  CHECK(to_string(Coweight{-1, 7}) == "-1,7");
  CHECK(parse_coweight("-1,7") == Coweight{-1, 7});
  CHECK(parse_coweight("0,0") == Coweight{0, 0});
  CHECK_THROWS_AS(parse_coweight("12"), std::invalid_argument);
}
