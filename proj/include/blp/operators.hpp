#pragma once

#include <map>
#include <string>
#include <vector>

#include "blp/linop.hpp"
#include "blp/model.hpp"
#include "blp/partition.hpp"

namespace blp {

enum class MaximalKind { Grid, RowAll, ColAll };
enum class SquareKind { Difference, Calderon, CalderonStar };

struct SquareResult {
  // Pointwise sums of squares; the square function itself is the sqrt of
  // interior + boundary, which we never take so everything stays rational.
  BoundaryFunction interior_sum_sq;
  BoundaryFunction boundary_sum_sq;
  BoundaryFunction total_sum_sq() const { return interior_sum_sq + boundary_sum_sq; }
};

// Coefficients for a martingale transform: one function per interior grid
// point, each required to be measurable with respect to the field strictly
// below that point.
struct CoefficientFamily {
  std::vector<Coweight> points;
  std::vector<BoundaryFunction> values;
};

// Caches partitions / expectation operators for one model and exposes the
// derived operator families.
class Toolkit {
 public:
  explicit Toolkit(const ResolvedConfig& cfg);

  const ResolvedConfig& config() const { return cfg_; }
  const AtomSpace& atoms() const { return atoms_; }
  std::size_t dim() const { return atoms_.atom_count(); }

  const Partition& partition(const PartitionSpec& spec) const;
  LinOpPtr expectation(const PartitionSpec& spec) const;
  LinOpPtr level(Coweight l) const { return expectation(PartitionSpec::level(l)); }
  LinOpPtr row(long i) const { return expectation(PartitionSpec::row(i)); }
  LinOpPtr col(long j) const { return expectation(PartitionSpec::col(j)); }

  // Row/column martingale differences.  L(i0) and R(j0) are the coarsest
  // expectations themselves; valid ranges are i0..A and j0..B.
  LinOpPtr L(long i) const;
  LinOpPtr R(long j) const;
  // D = L R and D* = R L (they commute with each other's mean-zero parts
  // only through the identities the verification suites check).
  LinOpPtr D(Coweight l) const;
  LinOpPtr Dstar(Coweight l) const;
  // Two-parameter difference: E_l - E_{l-l1} - E_{l-l2} + E_{l-l1-l2}.
  // Defined when all four corners are representable.
  LinOpPtr dd(Coweight l) const;
  bool dd_defined(Coweight l) const;

  // Grid [i0..I] x [j0..J]; the full rectangle [i0..A] x [j0..B]; interior
  // grid points where dd is formed with all corners inside the grid.
  std::vector<Coweight> grid() const;
  std::vector<Coweight> full_rect() const;
  std::vector<Coweight> interior_grid() const;

  // Pointwise maximum of |E f| over the relevant family of expectations.
  BoundaryFunction maximal(const BoundaryFunction& f, MaximalKind kind) const;

  SquareResult square_function(const BoundaryFunction& f, SquareKind kind) const;

  // sum_l v_l * dd_l f over the interior grid; validates that each v_l is
  // measurable w.r.t. Level(l - l1 - l2).
  BoundaryFunction martingale_transform(const BoundaryFunction& f,
                                        const CoefficientFamily& coeffs) const;

  // sum over the full rectangle of D_l D*_l.
  LinOpPtr calderon_sum() const;

  bool measurable(const BoundaryFunction& f, const PartitionSpec& spec) const;

  // Integral of |f|^m (integer m) against the uniform measure; exact.
  Rational lp_power_exact(const BoundaryFunction& f, long m) const;
  double lp_norm(const BoundaryFunction& f, double p) const;
  Rational linf_norm(const BoundaryFunction& f) const;
  Rational inner_product(const BoundaryFunction& f, const BoundaryFunction& g) const;
  Rational norm2_sq(const BoundaryFunction& f) const { return inner_product(f, f); }

 private:
  ResolvedConfig cfg_;
  AtomSpace atoms_;
  mutable std::map<std::string, Partition> parts_;
  mutable std::map<std::string, LinOpPtr> ops_;
};

}  // namespace blp
