#include "blp/model.hpp"

#include <sstream>
#include <stdexcept>

namespace blp {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t upow(std::uint64_t base, long exp) {
  std::uint64_t r = 1;
  for (long k = 0; k < exp; ++k) r *= base;
  return r;
}

ResolvedConfig resolve(const ModelConfig& cfg) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (!is_prime(cfg.p)) fail("p must be prime, got " + std::to_string(cfg.p));
  if (cfg.I < cfg.i0 || cfg.J < cfg.j0) fail("grid requires i0 <= I and j0 <= J");

  ResolvedConfig r;
  r.p = cfg.p;
  r.i0 = cfg.i0;
  r.j0 = cfg.j0;
  r.I = cfg.I;
  r.J = cfg.J;
  r.C = cfg.C.value_or(cfg.I + cfg.J);
  r.A = cfg.A.value_or(r.C - cfg.j0);
  r.B = cfg.B.value_or(r.C - cfg.i0);

  if (r.A < r.I) fail("A must be >= I");
  if (r.B < r.J) fail("B must be >= J");
  if (r.C < r.I + r.J) fail("C must be >= I + J");
  if (r.C > r.A + r.B) fail("C must be <= A + B (stabilizer must be a subgroup)");
  if (r.A + r.j0 < r.C) fail("A + j0 must be >= C (row cells must be unions of atoms)");
  if (r.B + r.i0 < r.C) fail("B + i0 must be >= C (column cells must be unions of atoms)");
  return r;
}

AtomSpace::AtomSpace(const ResolvedConfig& cfg) : cfg_(cfg) {
  nu_ = upow(static_cast<std::uint64_t>(cfg.p), cfg.A - cfg.i0);
  nv_ = upow(static_cast<std::uint64_t>(cfg.p), cfg.B - cfg.j0);
  nw_ = upow(static_cast<std::uint64_t>(cfg.p), cfg.C - cfg.i0 - cfg.j0);
}

GroupElement AtomSpace::element(std::size_t idx) const {
  GroupElement g;
  g.w = idx % nw_;
  idx /= nw_;
  g.v = idx % nv_;
  g.u = idx / nv_;
  return g;
}

std::size_t AtomSpace::index(GroupElement g) const {
  return static_cast<std::size_t>((g.u * nv_ + g.v) * nw_ + g.w);
}

GroupElement AtomSpace::mul(GroupElement a, GroupElement b) const {
  GroupElement g;
  g.u = (a.u + b.u) % nu_;
  g.v = (a.v + b.v) % nv_;
  g.w = (a.w + b.w + a.u * b.v) % nw_;
  return g;
}

GroupElement AtomSpace::inverse(GroupElement a) const {
  GroupElement g;
  g.u = (nu_ - a.u) % nu_;
  g.v = (nv_ - a.v) % nv_;
  g.w = (2 * nw_ - a.w + (a.u * a.v) % nw_) % nw_;
  return g;
}

Rational AtomSpace::atom_measure() const {
  Rational box = rat_pow(cfg_.p, -2 * (cfg_.i0 + cfg_.j0));
  Rational n(static_cast<unsigned long>(atom_count()));
  Rational m = box / n;
  m.canonicalize();
  return m;
}

Rational AtomSpace::cell_measure(std::size_t n_atoms) const {
  Rational m = atom_measure() * Rational(static_cast<unsigned long>(n_atoms));
  m.canonicalize();
  return m;
}

std::string AtomSpace::metadata_json() const {
  std::ostringstream os;
  os << "{\"p\":" << cfg_.p << ",\"i0\":" << cfg_.i0 << ",\"j0\":" << cfg_.j0
     << ",\"I\":" << cfg_.I << ",\"J\":" << cfg_.J << ",\"A\":" << cfg_.A
     << ",\"B\":" << cfg_.B << ",\"C\":" << cfg_.C
     << ",\"atom_count\":" << atom_count()
     << ",\"atom_measure\":\"" << rat_str(atom_measure()) << "\"}";
  return os.str();
}

}  // namespace blp
