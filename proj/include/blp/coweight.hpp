#pragma once

#include <algorithm>
#include <string>

namespace blp {

// Lattice point (i, j) indexing the two directions of refinement.
struct Coweight {
  long i = 0;
  long j = 0;

  friend Coweight operator+(Coweight a, Coweight b) { return {a.i + b.i, a.j + b.j}; }
  friend Coweight operator-(Coweight a, Coweight b) { return {a.i - b.i, a.j - b.j}; }
  friend bool operator==(Coweight a, Coweight b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(Coweight a, Coweight b) { return !(a == b); }
};

inline constexpr Coweight lambda1{1, 0};
inline constexpr Coweight lambda2{0, 1};

enum class Root { Alpha0, Alpha1, Alpha2 };

// Pairing of a lattice point with the three positive roots:
// alpha1 -> i, alpha2 -> j, alpha0 = alpha1 + alpha2 -> i + j.
inline long pairing(Coweight l, Root a) {
  switch (a) {
    case Root::Alpha1: return l.i;
    case Root::Alpha2: return l.j;
    default: return l.i + l.j;
  }
}

inline long level(Coweight l) { return l.i + l.j; }

// Componentwise order.
inline bool leq(Coweight a, Coweight b) { return a.i <= b.i && a.j <= b.j; }

// Max-norm distance on the lattice.
inline long dist(Coweight a, Coweight b) {
  return std::max(std::labs(a.i - b.i), std::labs(a.j - b.j));
}

inline std::string to_string(Coweight l) {
  return std::to_string(l.i) + "," + std::to_string(l.j);
}

Coweight parse_coweight(const std::string& s);

}  // namespace blp
