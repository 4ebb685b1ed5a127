#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blp/coweight.hpp"
#include "blp/exact.hpp"
#include "blp/model.hpp"

namespace blp {

// Identifies one of the sigma-fields on the box: the two-parameter family
// Level(lambda), the single-parameter row/column fields Row(i) and Col(j),
// and finite joins (common refinements) of Level fields.
struct PartitionSpec {
  enum class Kind { Level, Row, Col, Join };
  Kind kind = Kind::Level;
  Coweight lambda{0, 0};  // Level
  long index = 0;         // Row / Col
  std::vector<Coweight> join;

  static PartitionSpec level(Coweight l) { return {Kind::Level, l, 0, {}}; }
  static PartitionSpec row(long i) { return {Kind::Row, {}, i, {}}; }
  static PartitionSpec col(long j) { return {Kind::Col, {}, j, {}}; }
  static PartitionSpec join_of(std::vector<Coweight> ls) {
    return {Kind::Join, {}, 0, std::move(ls)};
  }

  std::string name() const;
};

// Whether the sigma-field exists in this truncated model: Level(lambda)
// needs i0 <= lambda.i <= A, j0 <= lambda.j <= B, level(lambda) <= C;
// Row(i) needs i0 <= i <= A; Col(j) needs j0 <= j <= B.
bool representable(const ResolvedConfig& cfg, const PartitionSpec& spec);

// A partition of the atoms into cells.  cell_of[k] is the cell containing
// atom k; cell_size[c] counts atoms in cell c.
struct Partition {
  std::vector<std::uint32_t> cell_of;
  std::vector<std::uint32_t> cell_size;
  std::size_t cell_count() const { return cell_size.size(); }
};

Partition build_partition(const AtomSpace& atoms, const PartitionSpec& spec);

// Conditional expectation of f with respect to the partition: averages f
// over each cell.  Exact; multiplies the shared denominator by at most the
// cell size (a power of p).
BoundaryFunction cond_expect(const Partition& part, const BoundaryFunction& f);

// One row per atom: atom index, u, v, w, cell id.
std::string partition_csv(const AtomSpace& atoms, const Partition& part);

}  // namespace blp
