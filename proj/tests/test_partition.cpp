#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "blp/partition.hpp"

using namespace blp;

namespace {

ResolvedConfig small(long p) {
  ModelConfig mc;
  mc.p = p;
  mc.I = 1;
  mc.J = 1;
  return resolve(mc);
}

// Oracle partitions built from first principles on the group itself, with no
// digit-key shortcuts: Level cells are left cosets of the scale subgroup,
// Row/Col cells are right-translation orbits.

std::vector<int> oracle_level(const AtomSpace& atoms, Coweight l) {
  const auto& cfg = atoms.config();
  std::uint64_t p = static_cast<std::uint64_t>(cfg.p);
  std::uint64_t mu = upow(p, l.i - cfg.i0);
  std::uint64_t mv = upow(p, l.j - cfg.j0);
  std::uint64_t mw = upow(p, level(l) - cfg.i0 - cfg.j0);
  auto in_subgroup = [&](GroupElement g) {
    return g.u % mu == 0 && g.v % mv == 0 && g.w % mw == 0;
  };
  std::size_t n = atoms.atom_count();
  std::vector<int> cell(n, -1);
  int next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (cell[a] >= 0) continue;
    cell[a] = next;
    GroupElement ga = atoms.element(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (cell[b] >= 0) continue;
      if (in_subgroup(atoms.mul(atoms.inverse(ga), atoms.element(b)))) cell[b] = next;
    }
    ++next;
  }
  return cell;
}

std::vector<int> oracle_orbit(const AtomSpace& atoms, bool row, long idx) {
  const auto& cfg = atoms.config();
  std::uint64_t p = static_cast<std::uint64_t>(cfg.p);
  std::uint64_t step = upow(p, row ? idx - cfg.i0 : idx - cfg.j0);
  std::size_t n = atoms.atom_count();
  std::vector<int> cell(n, -1);
  int next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (cell[a] >= 0) continue;
    // flood the orbit of right translations
    std::vector<std::size_t> stack{a};
    cell[a] = next;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      GroupElement g = atoms.element(cur);
      std::uint64_t lim = row ? atoms.umod() : atoms.vmod();
      for (std::uint64_t t = 0; t < lim; t += step) {
        GroupElement h = row ? GroupElement{t, 0, 0} : GroupElement{0, t, 0};
        std::size_t nb = atoms.index(atoms.mul(g, h));
        if (cell[nb] < 0) {
          cell[nb] = next;
          stack.push_back(nb);
        }
      }
    }
    ++next;
  }
  return cell;
}

bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<int>& b) {
  // equivalence relations agree, labels may differ
  std::map<std::uint32_t, int> fwd;
  std::map<int, std::uint32_t> bwd;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto [it1, in1] = fwd.emplace(a[k], b[k]);
    if (!in1 && it1->second != b[k]) return false;
    auto [it2, in2] = bwd.emplace(b[k], a[k]);
    if (!in2 && it2->second != a[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("level cells are the subgroup cosets") {
  for (long p : {2L, 3L}) {
    AtomSpace atoms{small(p)};
    for (Coweight l : {Coweight{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}) {
      auto part = build_partition(atoms, PartitionSpec::level(l));
      CHECK(same_partition(part.cell_of, oracle_level(atoms, l)));
    }
  }
}

TEST_CASE("row and column cells are the translation orbits") {
  for (long p : {2L, 3L}) {
    AtomSpace atoms{small(p)};
    for (long i = 0; i <= atoms.config().A; ++i) {
      auto part = build_partition(atoms, PartitionSpec::row(i));
      CHECK(same_partition(part.cell_of, oracle_orbit(atoms, true, i)));
    }
    for (long j = 0; j <= atoms.config().B; ++j) {
      auto part = build_partition(atoms, PartitionSpec::col(j));
      CHECK(same_partition(part.cell_of, oracle_orbit(atoms, false, j)));
    }
  }
}

TEST_CASE("cells are equal sized and cover the space") {
  AtomSpace atoms{small(2)};
  for (auto spec : {PartitionSpec::level({1, 1}), PartitionSpec::row(1),
                    PartitionSpec::col(2),
                    PartitionSpec::join_of({{1, 0}, {0, 1}})}) {
    auto part = build_partition(atoms, spec);
    std::size_t total = 0;
    for (auto s : part.cell_size) {
      CHECK(s == part.cell_size[0]);
      total += s;
    }
    CHECK(total == atoms.atom_count());
  }
}

TEST_CASE("join of the two middle levels is coarser than their sup") {
  AtomSpace atoms{small(2)};
  auto join = build_partition(atoms, PartitionSpec::join_of({{1, 0}, {0, 1}}));
  auto top = build_partition(atoms, PartitionSpec::level({1, 1}));
  CHECK(join.cell_count() == 8);
  CHECK(top.cell_count() == 16);
  // top refines join
  std::map<std::uint32_t, std::uint32_t> img;
  for (std::size_t k = 0; k < top.cell_of.size(); ++k) {
    auto [it, fresh] = img.emplace(top.cell_of[k], join.cell_of[k]);
    CHECK(it->second == join.cell_of[k]);
  }
}

TEST_CASE("representability window") {
  auto cfg = small(2);
  CHECK(representable(cfg, PartitionSpec::level({2, 0})));
  CHECK(!representable(cfg, PartitionSpec::level({2, 1})));  // level 3 > C
  CHECK(!representable(cfg, PartitionSpec::level({3, 0})));  // beyond A
  CHECK(!representable(cfg, PartitionSpec::level({-1, 0})));
  CHECK(representable(cfg, PartitionSpec::row(2)));
  CHECK(!representable(cfg, PartitionSpec::row(3)));
  CHECK_THROWS_AS(build_partition(AtomSpace{cfg}, PartitionSpec::level({2, 1})),
                  std::invalid_argument);
}

TEST_CASE("conditional expectation averages over cells") {
  AtomSpace atoms{small(2)};
  auto part = build_partition(atoms, PartitionSpec::level({1, 1}));

  BoundaryFunction c = BoundaryFunction::constant(atoms.atom_count(), Rational(3, 7));
  CHECK(cond_expect(part, c) == c);

  BoundaryFunction ind(atoms.atom_count());
  ind.numerators()[5] = 1;
  auto e = cond_expect(part, ind);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (part.cell_of[k] == part.cell_of[5])
      CHECK(e.value(k) == Rational(1, part.cell_size[part.cell_of[5]]));
    else
      CHECK(e.value(k) == 0);
  }

  // integral preserved
  Rational before = 0, after = 0;
  for (std::size_t k = 0; k < ind.size(); ++k) {
    before += ind.value(k);
    after += e.value(k);
  }
  CHECK(before == after);
}

TEST_CASE("csv export has one row per atom") {
  AtomSpace atoms{small(2)};
  auto part = build_partition(atoms, PartitionSpec::row(1));
  auto csv = partition_csv(atoms, part);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + atoms.atom_count());
  CHECK(csv.rfind("atom,u,v,w,cell\n", 0) == 0);
}
