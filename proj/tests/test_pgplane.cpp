#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blp/pgplane.hpp"

using namespace blp;

TEST_CASE("counts for small orders") {
  CHECK(build_plane(2).point_count() == 7);
  CHECK(build_plane(2).line_count() == 7);
  CHECK(build_plane(3).point_count() == 13);
  CHECK(build_plane(5).point_count() == 31);
  auto p3 = build_plane(3);
  for (std::size_t l = 0; l < p3.line_count(); ++l) {
    long c = 0;
    for (std::size_t p = 0; p < p3.point_count(); ++p) c += p3.incident[p][l];
    CHECK(c == 4);
  }
  CHECK_THROWS_AS(build_plane(4), std::invalid_argument);
  CHECK_THROWS_AS(build_plane(1), std::invalid_argument);
}

TEST_CASE("axioms hold for q in {2,3,5,7}") {
  for (long q : {2L, 3L, 5L, 7L}) {
    auto pl = build_plane(q);
    auto res = check_plane_axioms(pl);
    CHECK(res.ok());
  }
}

TEST_CASE("a corrupted incidence is caught with a witness") {
  auto pl = build_plane(2);
  // flip one incidence
  pl.incident[0][0] = !pl.incident[0][0];
  auto res = check_plane_axioms(pl);
  CHECK(!res.ok());
  CHECK(!res.witness.empty());
}

TEST_CASE("flag counting identities") {
  for (long q : {2L, 3L, 5L, 7L}) {
    auto res = check_residue_identities(build_plane(q));
    CHECK(res.ok());
  }
}

TEST_CASE("two-step path profile") {
  for (long q : {2L, 3L}) {
    auto pl = build_plane(q);
    // find a flag and an off-line point
    for (std::size_t p0 = 0; p0 < 1; ++p0)
      for (std::size_t l0 = 0; l0 < pl.line_count(); ++l0) {
        if (!pl.incident[p0][l0]) continue;
        for (std::size_t p1 = 0; p1 < pl.point_count(); ++p1) {
          if (pl.incident[p1][l0]) continue;
          auto prof = path_count_profile(pl, p0, l0, p1);
          CHECK(prof[q] == 1);
          CHECK(prof[1] == q * q - q);
          CHECK(prof[0] == q - 1);
        }
      }
  }
}

TEST_CASE("line through two points") {
  auto pl = build_plane(3);
  for (std::size_t a = 0; a < pl.point_count(); ++a)
    for (std::size_t b = a + 1; b < pl.point_count(); ++b) {
      auto l = pl.line_through(a, b);
      CHECK(pl.incident[a][l]);
      CHECK(pl.incident[b][l]);
    }
}

TEST_CASE("incidence csv") {
  auto pl = build_plane(2);
  auto csv = incidence_csv(pl);
  // 7 lines x 3 points each + header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 21);
}
