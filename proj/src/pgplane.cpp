#include "blp/pgplane.hpp"

#include <sstream>
#include <stdexcept>

#include "blp/model.hpp"

namespace blp {

namespace {

// Normalized representatives of 1-dimensional subspaces of F_q^3:
// (1, *, *), (0, 1, *), (0, 0, 1), enumerated lexicographically.
std::vector<std::array<long, 3>> normalized_triples(long q) {
  std::vector<std::array<long, 3>> out;
  for (long y = 0; y < q; ++y)
    for (long z = 0; z < q; ++z) out.push_back({1, y, z});
  for (long z = 0; z < q; ++z) out.push_back({0, 1, z});
  out.push_back({0, 0, 1});
  return out;
}

long dot(const std::array<long, 3>& a, const std::array<long, 3>& b, long q) {
  return (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
}

}  // namespace

ProjectivePlane build_plane(long q) {
  if (!is_prime(q)) throw std::invalid_argument("plane order must be prime");
  ProjectivePlane pl;
  pl.q = q;
  pl.points = normalized_triples(q);
  pl.lines = normalized_triples(q);
  pl.incident.assign(pl.points.size(), std::vector<bool>(pl.lines.size(), false));
  for (std::size_t p = 0; p < pl.points.size(); ++p)
    for (std::size_t l = 0; l < pl.lines.size(); ++l)
      pl.incident[p][l] = dot(pl.points[p], pl.lines[l], q) == 0;
  return pl;
}

std::size_t ProjectivePlane::line_through(std::size_t p, std::size_t r) const {
  for (std::size_t l = 0; l < lines.size(); ++l)
    if (incident[p][l] && incident[r][l]) return l;
  throw std::logic_error("no line through point pair");
}

CheckResult check_plane_axioms(const ProjectivePlane& pl) {
  long q = pl.q;
  std::size_t n = static_cast<std::size_t>(q * q + q + 1);
  if (pl.point_count() != n || pl.line_count() != n)
    return CheckResult::fail("plane-axioms", "wrong point or line count");

  for (std::size_t l = 0; l < n; ++l) {
    long c = 0;
    for (std::size_t p = 0; p < n; ++p) c += pl.incident[p][l];
    if (c != q + 1)
      return CheckResult::fail("plane-axioms", "line " + std::to_string(l) + " has " +
                                                   std::to_string(c) + " points");
  }
  for (std::size_t p = 0; p < n; ++p) {
    long c = 0;
    for (std::size_t l = 0; l < n; ++l) c += pl.incident[p][l];
    if (c != q + 1)
      return CheckResult::fail("plane-axioms", "point " + std::to_string(p) + " lies on " +
                                                   std::to_string(c) + " lines");
  }

  // N N^T = qI + J: common-line counts, which also gives unique joins.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) {
      long c = 0;
      for (std::size_t l = 0; l < n; ++l) c += pl.incident[p][l] && pl.incident[r][l];
      long want = (p == r) ? q + 1 : 1;
      if (c != want)
        return CheckResult::fail("plane-axioms", "points " + std::to_string(p) + "," +
                                                     std::to_string(r) + " share " +
                                                     std::to_string(c) + " lines");
    }
  return CheckResult::pass("plane-axioms");
}

std::map<long, long> path_count_profile(const ProjectivePlane& pl, std::size_t p0,
                                        std::size_t l0, std::size_t p1) {
  std::size_t n = pl.point_count();
  std::size_t l1 = pl.line_through(p0, p1);
  (void)l1;
  // Two steps: p1 -> line l with l ~ p1, l !~ p0 -> point p' with p' ~ l,
  // p' !~ l0.  Profile over landing points p' !~ l0.
  std::vector<long> count(n, 0);
  for (std::size_t l = 0; l < n; ++l) {
    if (!pl.incident[p1][l] || pl.incident[p0][l]) continue;
    for (std::size_t pp = 0; pp < n; ++pp)
      if (pl.incident[pp][l] && !pl.incident[pp][l0]) ++count[pp];
  }
  std::map<long, long> profile;
  for (std::size_t pp = 0; pp < n; ++pp)
    if (!pl.incident[pp][l0]) ++profile[count[pp]];
  return profile;
}

CheckResult check_residue_identities(const ProjectivePlane& pl) {
  long q = pl.q;
  std::size_t n = pl.point_count();
  for (std::size_t p0 = 0; p0 < n; ++p0)
    for (std::size_t l0 = 0; l0 < n; ++l0) {
      if (!pl.incident[p0][l0]) continue;
      for (std::size_t p1 = 0; p1 < n; ++p1) {
        if (pl.incident[p1][l0]) continue;
        std::size_t l1 = pl.line_through(p0, p1);
        std::string where = "p0=" + std::to_string(p0) + ",l0=" + std::to_string(l0) +
                            ",p1=" + std::to_string(p1);

        // (a) each line through p1 avoiding p0 has q points off l0, exactly
        // one of which lies on l1.
        for (std::size_t l = 0; l < n; ++l) {
          if (!pl.incident[p1][l] || pl.incident[p0][l]) continue;
          long off = 0, on_l1 = 0;
          for (std::size_t pp = 0; pp < n; ++pp) {
            if (!pl.incident[pp][l] || pl.incident[pp][l0]) continue;
            ++off;
            if (pl.incident[pp][l1]) ++on_l1;
          }
          if (off != q || on_l1 != 1)
            return CheckResult::fail("residue-identities",
                                     where + ",l=" + std::to_string(l) + " off=" +
                                         std::to_string(off) + " on_l1=" +
                                         std::to_string(on_l1));
        }

        // (b) two-step path counts: q at p1, 1 at points off l0 and l1,
        // 0 at the rest.
        std::vector<long> count(n, 0);
        for (std::size_t l = 0; l < n; ++l) {
          if (!pl.incident[p1][l] || pl.incident[p0][l]) continue;
          for (std::size_t pp = 0; pp < n; ++pp)
            if (pl.incident[pp][l] && !pl.incident[pp][l0]) ++count[pp];
        }
        for (std::size_t pp = 0; pp < n; ++pp) {
          long want;
          if (pp == p1)
            want = q;
          else if (!pl.incident[pp][l0] && !pl.incident[pp][l1])
            want = 1;
          else
            want = 0;
          if (count[pp] != want)
            return CheckResult::fail("residue-identities",
                                     where + ",p'=" + std::to_string(pp) + " count=" +
                                         std::to_string(count[pp]) + " want=" +
                                         std::to_string(want));
        }

        // (c) over points off both l0 and l1, each line avoiding p0 is hit
        // exactly q - 1 times.
        std::vector<long> hits(n, 0);
        for (std::size_t pp = 0; pp < n; ++pp) {
          if (pl.incident[pp][l0] || pl.incident[pp][l1]) continue;
          for (std::size_t l = 0; l < n; ++l)
            if (pl.incident[pp][l] && !pl.incident[p0][l]) ++hits[l];
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (pl.incident[p0][l]) continue;
          if (hits[l] != q - 1)
            return CheckResult::fail("residue-identities",
                                     where + ",l=" + std::to_string(l) + " hits=" +
                                         std::to_string(hits[l]));
        }
      }
    }
  return CheckResult::pass("residue-identities");
}

std::string incidence_csv(const ProjectivePlane& pl) {
  std::ostringstream os;
  os << "point_id,line_id\n";
  for (std::size_t p = 0; p < pl.point_count(); ++p)
    for (std::size_t l = 0; l < pl.line_count(); ++l)
      if (pl.incident[p][l]) os << p << ',' << l << '\n';
  return os.str();
}

}  // namespace blp
