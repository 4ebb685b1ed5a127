#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blp/exact.hpp"
#include "blp/partition.hpp"

namespace blp {

// Linear operator on functions over the atoms.  Every operator supports an
// exact apply and a double apply (used for norm estimation).  The measure on
// atoms is uniform, so the Hilbert adjoint is the plain transpose up to the
// constant atom measure, which cancels; adjoint_apply implements T*.
class LinOp {
 public:
  virtual ~LinOp() = default;
  virtual std::size_t dim() const = 0;
  virtual std::string name() const = 0;
  virtual BoundaryFunction apply(const BoundaryFunction& f) const = 0;
  virtual void apply(const std::vector<double>& in, std::vector<double>& out) const = 0;
  virtual BoundaryFunction adjoint_apply(const BoundaryFunction& f) const = 0;
  virtual void adjoint_apply(const std::vector<double>& in,
                             std::vector<double>& out) const = 0;
};

using LinOpPtr = std::shared_ptr<const LinOp>;

// Conditional expectation onto a partition.  Self-adjoint and idempotent.
class ExpectationOp : public LinOp {
 public:
  ExpectationOp(Partition part, std::string name);
  std::size_t dim() const override { return part_.cell_of.size(); }
  std::string name() const override { return name_; }
  BoundaryFunction apply(const BoundaryFunction& f) const override;
  void apply(const std::vector<double>& in, std::vector<double>& out) const override;
  BoundaryFunction adjoint_apply(const BoundaryFunction& f) const override {
    return apply(f);
  }
  void adjoint_apply(const std::vector<double>& in, std::vector<double>& out) const override {
    apply(in, out);
  }
  const Partition& partition() const { return part_; }

 private:
  Partition part_;
  std::string name_;
};

class IdentityOp : public LinOp {
 public:
  explicit IdentityOp(std::size_t n) : n_(n) {}
  std::size_t dim() const override { return n_; }
  std::string name() const override { return "id"; }
  BoundaryFunction apply(const BoundaryFunction& f) const override { return f; }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override {
    out = in;
  }
  BoundaryFunction adjoint_apply(const BoundaryFunction& f) const override { return f; }
  void adjoint_apply(const std::vector<double>& in, std::vector<double>& out) const override {
    out = in;
  }

 private:
  std::size_t n_;
};

// Composition: applies factors right to left, like written products.
LinOpPtr compose(std::vector<LinOpPtr> factors);
// Sum  c_1 T_1 + ... + c_m T_m  with exact rational coefficients.
LinOpPtr lincomb(std::vector<Rational> coeffs, std::vector<LinOpPtr> terms);
LinOpPtr scaled(const Rational& c, LinOpPtr t);
// T* as a standalone operator.
LinOpPtr adjoint(LinOpPtr t);

// Dense column-major materialization via basis vectors; intended for small
// atom counts only.
std::vector<std::vector<Rational>> materialize(const LinOp& op);
std::string matrix_csv(const std::vector<std::vector<Rational>>& m);

// Operator norm (largest singular value) by power iteration on T*T with a
// fixed deterministic start vector.  tol is the relative Rayleigh-quotient
// convergence threshold.
double operator_norm2(const LinOp& op, double tol = 1e-9, int max_iter = 20000);

struct CotlarResult {
  double bound = 0;       // the almost-orthogonality bound on |sum T_k|
  double sum_norm = 0;    // measured |sum T_k|
  std::size_t argmax = 0; // index attaining the outer max
};

// max_mu sum_lambda max(|T_mu T_lambda*|, |T_mu* T_lambda|)^{1/2}, together
// with the measured norm of the sum for comparison.
CotlarResult cotlar_bound(const std::vector<LinOpPtr>& ops, double tol = 1e-9);

}  // namespace blp
