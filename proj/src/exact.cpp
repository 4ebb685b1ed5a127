#include "blp/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "blp/coweight.hpp"

namespace blp {

Coweight parse_coweight(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected \"i,j\": " + s);
  return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
}

Rational rat_pow(long p, long e) {
  Rational r;
  if (e >= 0) {
    mpz_ui_pow_ui(r.get_num_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  } else {
    r = 1;
    mpz_ui_pow_ui(r.get_den_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(-e));
  }
  return r;
}

std::string rat_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BoundaryFunction::BoundaryFunction(std::vector<Integer> num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ <= 0) throw std::invalid_argument("denominator must be positive");
}

BoundaryFunction BoundaryFunction::constant(std::size_t n, const Rational& c) {
  Rational r = c;
  r.canonicalize();
  BoundaryFunction f(n);
  for (auto& x : f.num_) x = r.get_num();
  f.den_ = r.get_den();
  return f;
}

BoundaryFunction BoundaryFunction::from_rationals(const std::vector<Rational>& vals) {
  Integer den = 1;
  for (const auto& v : vals) {
    Rational c = v;
    c.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  BoundaryFunction f(vals.size());
  f.den_ = den;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    Rational c = vals[k];
    c.canonicalize();
    f.num_[k] = c.get_num() * (den / c.get_den());
  }
  return f;
}

Rational BoundaryFunction::value(std::size_t k) const {
  Rational r(num_[k], den_);
  r.canonicalize();
  return r;
}

void BoundaryFunction::normalize() {
  Integer g = den_;
  for (const auto& x : num_) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 1 || g == 0) return;
  den_ /= g;
  for (auto& x : num_) x /= g;
}

BoundaryFunction& BoundaryFunction::operator+=(const BoundaryFunction& o) {
  if (size() != o.size()) throw std::invalid_argument("size mismatch");
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    Integer a = l / den_, b = l / o.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * a + o.num_[k] * b;
    den_ = l;
  }
  normalize();
  return *this;
}

BoundaryFunction& BoundaryFunction::operator-=(const BoundaryFunction& o) {
  if (size() != o.size()) throw std::invalid_argument("size mismatch");
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] -= o.num_[k];
  } else {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    Integer a = l / den_, b = l / o.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * a - o.num_[k] * b;
    den_ = l;
  }
  normalize();
  return *this;
}

void BoundaryFunction::scale(const Rational& c) {
  Rational r = c;
  r.canonicalize();
  for (auto& x : num_) x *= r.get_num();
  den_ *= r.get_den();
  if (r.get_num() == 0) den_ = 1;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  normalize();
}

BoundaryFunction BoundaryFunction::abs() const {
  BoundaryFunction f = *this;
  for (auto& x : f.num_) mpz_abs(x.get_mpz_t(), x.get_mpz_t());
  return f;
}

BoundaryFunction BoundaryFunction::pointwise_product(const BoundaryFunction& o) const {
  if (size() != o.size()) throw std::invalid_argument("size mismatch");
  BoundaryFunction f(size());
  for (std::size_t k = 0; k < num_.size(); ++k) f.num_[k] = num_[k] * o.num_[k];
  f.den_ = den_ * o.den_;
  f.normalize();
  return f;
}

bool BoundaryFunction::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x == 0; });
}

bool BoundaryFunction::nonnegative() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x >= 0; });
}

bool operator==(const BoundaryFunction& a, const BoundaryFunction& b) {
  return BoundaryFunction::first_diff(a, b) == BoundaryFunction::npos;
}

Rational BoundaryFunction::max_abs_diff(const BoundaryFunction& a, const BoundaryFunction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  Integer best = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Integer d = a.num_[k] * b.den_ - b.num_[k] * a.den_;
    mpz_abs(d.get_mpz_t(), d.get_mpz_t());
    if (d > best) best = d;
  }
  Rational r(best, a.den_ * b.den_);
  r.canonicalize();
  return r;
}

std::size_t BoundaryFunction::first_diff(const BoundaryFunction& a, const BoundaryFunction& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.num_[k] * b.den_ != b.num_[k] * a.den_) return k;
  return npos;
}

BoundaryFunction BoundaryFunction::pointwise_max(const std::vector<BoundaryFunction>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty max");
  Integer l = 1;
  for (const auto& f : fs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.den_.get_mpz_t());
  BoundaryFunction out(fs.front().size());
  out.den_ = l;
  std::vector<Integer> scales;
  scales.reserve(fs.size());
  for (const auto& f : fs) scales.push_back(l / f.den_);
  for (std::size_t k = 0; k < out.size(); ++k) {
    Integer best = fs[0].num_[k] * scales[0];
    for (std::size_t t = 1; t < fs.size(); ++t) {
      Integer c = fs[t].num_[k] * scales[t];
      if (c > best) best = c;
    }
    out.num_[k] = best;
  }
  out.normalize();
  return out;
}

bool BoundaryFunction::dominated(const BoundaryFunction& a, const BoundaryFunction& b,
                                 std::size_t* witness) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.num_[k] * b.den_ > b.num_[k] * a.den_) {
      if (witness) *witness = k;
      return false;
    }
  }
  return true;
}

Rational BoundaryFunction::max_value() const {
  Integer best = num_.empty() ? Integer(0) : num_[0];
  for (const auto& x : num_)
    if (x > best) best = x;
  Rational r(best, den_);
  r.canonicalize();
  return r;
}

Rational BoundaryFunction::min_value() const {
  Integer best = num_.empty() ? Integer(0) : num_[0];
  for (const auto& x : num_)
    if (x < best) best = x;
  Rational r(best, den_);
  r.canonicalize();
  return r;
}

std::vector<double> BoundaryFunction::to_doubles() const {
  std::vector<double> out(size());
  double d = den_.get_d();
  for (std::size_t k = 0; k < size(); ++k) out[k] = num_[k].get_d() / d;
  return out;
}

}  // namespace blp
