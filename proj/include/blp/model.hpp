#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blp/coweight.hpp"
#include "blp/exact.hpp"

namespace blp {

// User-facing configuration.  Grid corners (i0, j0) and (I, J); truncation
// exponents A, B, C default to C = I + J, A = C - j0, B = C - i0.
struct ModelConfig {
  long p = 2;
  long i0 = 0, j0 = 0, I = 1, J = 1;
  std::optional<long> A, B, C;
};

struct ResolvedConfig {
  long p;
  long i0, j0, I, J;
  long A, B, C;
  long q() const { return p; }
};

// Validates primality, grid ordering, and the truncation inequalities that
// make the digit model consistent (A >= I, B >= J, C >= I + J, C <= A + B,
// A + j0 >= C, B + i0 >= C).  Throws std::invalid_argument on violation.
ResolvedConfig resolve(const ModelConfig& cfg);

bool is_prime(long n);

// One atom, in unscaled digit coordinates.
struct GroupElement {
  std::uint64_t u = 0, v = 0, w = 0;
  friend bool operator==(GroupElement a, GroupElement b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

// Enumerates the atoms of the box as triples (u, v, w) with
// u < p^(A-i0), v < p^(B-j0), w < p^(C-i0-j0), indexed lexicographically.
class AtomSpace {
 public:
  explicit AtomSpace(const ResolvedConfig& cfg);

  const ResolvedConfig& config() const { return cfg_; }
  std::size_t atom_count() const { return static_cast<std::size_t>(nu_ * nv_ * nw_); }
  std::uint64_t umod() const { return nu_; }
  std::uint64_t vmod() const { return nv_; }
  std::uint64_t wmod() const { return nw_; }

  GroupElement element(std::size_t idx) const;
  std::size_t index(GroupElement g) const;

  GroupElement mul(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;

  // Measure of a single atom: p^{-2(i0+j0)} / atom_count.
  Rational atom_measure() const;
  // Measure of a union of n atoms.
  Rational cell_measure(std::size_t n_atoms) const;

  std::string metadata_json() const;

 private:
  ResolvedConfig cfg_;
  std::uint64_t nu_, nv_, nw_;
};

std::uint64_t upow(std::uint64_t base, long exp);

}  // namespace blp
