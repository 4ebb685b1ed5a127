#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "blp/check.hpp"

namespace blp {

// The Desarguesian projective plane of prime order q: points are normalized
// 1-dimensional subspaces of F_q^3, lines normalized functionals, incidence
// is vanishing of the dot product.
struct ProjectivePlane {
  long q = 0;
  std::vector<std::array<long, 3>> points;  // first nonzero coordinate = 1
  std::vector<std::array<long, 3>> lines;
  // incident[p][l]
  std::vector<std::vector<bool>> incident;

  std::size_t point_count() const { return points.size(); }
  std::size_t line_count() const { return lines.size(); }
  // The unique line through two distinct points.
  std::size_t line_through(std::size_t p, std::size_t r) const;
};

ProjectivePlane build_plane(long q);

// q^2 + q + 1 points and lines, q + 1 incidences each way, unique joins,
// and N N^T = qI + J for the incidence matrix N.
CheckResult check_plane_axioms(const ProjectivePlane& plane);

// The flag-level counting facts behind the one-step and two-step averaging
// identities: with (p0, l0) a flag, p1 off l0, and l1 the join of p0 and p1,
//  (a) every line through p1 avoiding p0 meets l1 in exactly one of its q
//      points off l0;
//  (b) two-step path counts from p1 through such lines land q times on p1
//      and once on each point off both l0 and l1;
//  (c) summing lines over all points off l0 and l1, each line avoiding p0
//      appears exactly q - 1 times.
CheckResult check_residue_identities(const ProjectivePlane& plane);

// Two-step path-count profile from one start point: counts of landing
// points off l0, keyed by count value.  The same profile must arise from
// the coset model's composed conditional expectations.
std::map<long, long> path_count_profile(const ProjectivePlane& plane, std::size_t p0,
                                        std::size_t l0, std::size_t p1);

std::string incidence_csv(const ProjectivePlane& plane);

}  // namespace blp
