#include "blp/partition.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace blp {

std::string PartitionSpec::name() const {
  switch (kind) {
    case Kind::Level: return "Level(" + to_string(lambda) + ")";
    case Kind::Row: return "Row(" + std::to_string(index) + ")";
    case Kind::Col: return "Col(" + std::to_string(index) + ")";
    case Kind::Join: {
      std::string s = "Join(";
      for (std::size_t k = 0; k < join.size(); ++k) {
        if (k) s += ";";
        s += to_string(join[k]);
      }
      return s + ")";
    }
  }
  return "?";
}

bool representable(const ResolvedConfig& cfg, const PartitionSpec& spec) {
  auto level_ok = [&](Coweight l) {
    return cfg.i0 <= l.i && l.i <= cfg.A && cfg.j0 <= l.j && l.j <= cfg.B &&
           level(l) <= cfg.C;
  };
  switch (spec.kind) {
    case PartitionSpec::Kind::Level: return level_ok(spec.lambda);
    case PartitionSpec::Kind::Row: return cfg.i0 <= spec.index && spec.index <= cfg.A;
    case PartitionSpec::Kind::Col: return cfg.j0 <= spec.index && spec.index <= cfg.B;
    case PartitionSpec::Kind::Join:
      for (Coweight l : spec.join)
        if (!level_ok(l)) return false;
      return !spec.join.empty();
  }
  return false;
}

namespace {

using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

// The cell of an atom under Level(lambda): congruence classes of the first
// two digits at depths lambda.i - i0 and lambda.j - j0, with the third digit
// twisted by the group law before truncation at depth level(lambda) - i0 - j0.
Key level_key(const ResolvedConfig& cfg, GroupElement g, Coweight lambda) {
  std::uint64_t p = static_cast<std::uint64_t>(cfg.p);
  std::uint64_t mu = upow(p, lambda.i - cfg.i0);
  std::uint64_t mv = upow(p, lambda.j - cfg.j0);
  std::uint64_t mw = upow(p, level(lambda) - cfg.i0 - cfg.j0);
  std::uint64_t vhead = g.v - g.v % mv;
  std::uint64_t wkey = (g.w + mw - (g.u * vhead) % mw) % mw;
  return {g.u % mu, g.v % mv, wkey};
}

Key row_key(GroupElement g, const ResolvedConfig& cfg, long i) {
  std::uint64_t mu = upow(static_cast<std::uint64_t>(cfg.p), i - cfg.i0);
  return {g.u % mu, g.v, g.w};
}

Key col_key(const AtomSpace& atoms, const ResolvedConfig& cfg, GroupElement g, long j) {
  std::uint64_t mv = upow(static_cast<std::uint64_t>(cfg.p), j - cfg.j0);
  std::uint64_t mw = atoms.wmod();
  std::uint64_t vhead = g.v - g.v % mv;
  std::uint64_t wkey = (g.w + mw - (g.u * vhead) % mw) % mw;
  return {g.u, g.v % mv, wkey};
}

}  // namespace

Partition build_partition(const AtomSpace& atoms, const PartitionSpec& spec) {
  const ResolvedConfig& cfg = atoms.config();
  if (!representable(cfg, spec))
    throw std::invalid_argument("partition not representable in this model: " + spec.name());

  Partition part;
  part.cell_of.resize(atoms.atom_count());

  if (spec.kind == PartitionSpec::Kind::Join) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<Partition> members;
    members.reserve(spec.join.size());
    for (Coweight l : spec.join)
      members.push_back(build_partition(atoms, PartitionSpec::level(l)));
    std::vector<std::uint32_t> key(spec.join.size());
    for (std::size_t k = 0; k < atoms.atom_count(); ++k) {
      for (std::size_t m = 0; m < members.size(); ++m) key[m] = members[m].cell_of[k];
      auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
      if (inserted) part.cell_size.push_back(0);
      part.cell_of[k] = it->second;
      ++part.cell_size[it->second];
    }
    return part;
  }

  std::map<Key, std::uint32_t> ids;
  for (std::size_t k = 0; k < atoms.atom_count(); ++k) {
    GroupElement g = atoms.element(k);
    Key key;
    switch (spec.kind) {
      case PartitionSpec::Kind::Level: key = level_key(cfg, g, spec.lambda); break;
      case PartitionSpec::Kind::Row: key = row_key(g, cfg, spec.index); break;
      default: key = col_key(atoms, cfg, g, spec.index); break;
    }
    auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(ids.size()));
    if (inserted) part.cell_size.push_back(0);
    part.cell_of[k] = it->second;
    ++part.cell_size[it->second];
  }
  return part;
}

BoundaryFunction cond_expect(const Partition& part, const BoundaryFunction& f) {
  if (f.size() != part.cell_of.size()) throw std::invalid_argument("size mismatch");
  std::vector<Integer> sums(part.cell_count(), Integer(0));
  for (std::size_t k = 0; k < f.size(); ++k) sums[part.cell_of[k]] += f.numerators()[k];

  // All cells in one partition have equal size here (checked by tests), but
  // average per-cell so joins with ragged cells would still be correct.
  Integer lcm = 1;
  for (auto s : part.cell_size)
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), s);

  BoundaryFunction out(f.size());
  out.denominator() = f.denominator() * lcm;
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::uint32_t c = part.cell_of[k];
    out.numerators()[k] = sums[c] * (lcm / part.cell_size[c]);
  }
  out.normalize();
  return out;
}

std::string partition_csv(const AtomSpace& atoms, const Partition& part) {
  std::ostringstream os;
  os << "atom,u,v,w,cell\n";
  for (std::size_t k = 0; k < atoms.atom_count(); ++k) {
    GroupElement g = atoms.element(k);
    os << k << ',' << g.u << ',' << g.v << ',' << g.w << ',' << part.cell_of[k] << '\n';
  }
  return os.str();
}

}  // namespace blp
