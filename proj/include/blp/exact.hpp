#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace blp {

using Rational = mpq_class;
using Integer = mpz_class;

// p^e as an exact rational, e may be negative.
Rational rat_pow(long p, long e);

// Canonical "n" or "n/d" rendering.
std::string rat_str(const Rational& r);

// A function on the atoms of the box, stored exactly as a vector of integer
// numerators over one shared positive denominator.  All operators in this
// library preserve this representation (they only ever divide by powers of
// the residue cardinality), so arithmetic stays in integer land and the
// denominator stays small.
class BoundaryFunction {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  BoundaryFunction() = default;
  explicit BoundaryFunction(std::size_t n) : num_(n, Integer(0)), den_(1) {}
  BoundaryFunction(std::vector<Integer> num, Integer den);

  static BoundaryFunction constant(std::size_t n, const Rational& c);
  static BoundaryFunction from_rationals(const std::vector<Rational>& vals);

  std::size_t size() const { return num_.size(); }
  const std::vector<Integer>& numerators() const { return num_; }
  std::vector<Integer>& numerators() { return num_; }
  const Integer& denominator() const { return den_; }
  Integer& denominator() { return den_; }

  Rational value(std::size_t k) const;

  // Divide out the gcd of all numerators and the denominator.
  void normalize();

  BoundaryFunction& operator+=(const BoundaryFunction& o);
  BoundaryFunction& operator-=(const BoundaryFunction& o);
  void scale(const Rational& c);
  BoundaryFunction abs() const;
  BoundaryFunction pointwise_product(const BoundaryFunction& o) const;

  bool is_zero() const;
  bool nonnegative() const;
  friend bool operator==(const BoundaryFunction& a, const BoundaryFunction& b);
  friend bool operator!=(const BoundaryFunction& a, const BoundaryFunction& b) {
    return !(a == b);
  }

  static Rational max_abs_diff(const BoundaryFunction& a, const BoundaryFunction& b);
  // Index of the first atom where a and b differ, or npos.
  static std::size_t first_diff(const BoundaryFunction& a, const BoundaryFunction& b);
  static BoundaryFunction pointwise_max(const std::vector<BoundaryFunction>& fs);
  // a <= b pointwise; on failure reports the offending atom.
  static bool dominated(const BoundaryFunction& a, const BoundaryFunction& b,
                        std::size_t* witness = nullptr);

  Rational max_value() const;
  Rational min_value() const;

  std::vector<double> to_doubles() const;

 private:
  std::vector<Integer> num_;
  Integer den_ = 1;
};

inline BoundaryFunction operator+(BoundaryFunction a, const BoundaryFunction& b) {
  a += b;
  return a;
}
inline BoundaryFunction operator-(BoundaryFunction a, const BoundaryFunction& b) {
  a -= b;
  return a;
}

}  // namespace blp
