#include "blp/linop.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blp {

ExpectationOp::ExpectationOp(Partition part, std::string name)
    : part_(std::move(part)), name_(std::move(name)) {}

BoundaryFunction ExpectationOp::apply(const BoundaryFunction& f) const {
  return cond_expect(part_, f);
}

void ExpectationOp::apply(const std::vector<double>& in, std::vector<double>& out) const {
  std::vector<double> sums(part_.cell_count(), 0.0);
  for (std::size_t k = 0; k < in.size(); ++k) sums[part_.cell_of[k]] += in[k];
  out.resize(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    std::uint32_t c = part_.cell_of[k];
    out[k] = sums[c] / part_.cell_size[c];
  }
}

namespace {

class ComposeOp : public LinOp {
 public:
  explicit ComposeOp(std::vector<LinOpPtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("empty composition");
  }
  std::size_t dim() const override { return factors_.front()->dim(); }
  std::string name() const override {
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += " ";
      s += f->name();
    }
    return s;
  }
  BoundaryFunction apply(const BoundaryFunction& f) const override {
    BoundaryFunction g = f;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) g = (*it)->apply(g);
    return g;
  }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override {
    std::vector<double> cur = in, tmp;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
      (*it)->apply(cur, tmp);
      cur.swap(tmp);
    }
    out = std::move(cur);
  }
  BoundaryFunction adjoint_apply(const BoundaryFunction& f) const override {
    BoundaryFunction g = f;
    for (const auto& t : factors_) g = t->adjoint_apply(g);
    return g;
  }
  void adjoint_apply(const std::vector<double>& in, std::vector<double>& out) const override {
    std::vector<double> cur = in, tmp;
    for (const auto& t : factors_) {
      t->adjoint_apply(cur, tmp);
      cur.swap(tmp);
    }
    out = std::move(cur);
  }

 private:
  std::vector<LinOpPtr> factors_;
};

class LinCombOp : public LinOp {
 public:
  LinCombOp(std::vector<Rational> coeffs, std::vector<LinOpPtr> terms)
      : coeffs_(std::move(coeffs)), terms_(std::move(terms)) {
    if (terms_.empty() || coeffs_.size() != terms_.size())
      throw std::invalid_argument("bad linear combination");
    dcoeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) dcoeffs_.push_back(c.get_d());
  }
  std::size_t dim() const override { return terms_.front()->dim(); }
  std::string name() const override {
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k) s += " + ";
      if (coeffs_[k] != 1) s += rat_str(coeffs_[k]) + "*";
      s += "(" + terms_[k]->name() + ")";
    }
    return s;
  }
  BoundaryFunction apply(const BoundaryFunction& f) const override {
    return combine(f, false);
  }
  BoundaryFunction adjoint_apply(const BoundaryFunction& f) const override {
    return combine(f, true);
  }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override {
    combine_d(in, out, false);
  }
  void adjoint_apply(const std::vector<double>& in, std::vector<double>& out) const override {
    combine_d(in, out, true);
  }

 private:
  BoundaryFunction combine(const BoundaryFunction& f, bool adj) const {
    BoundaryFunction acc(f.size());
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      BoundaryFunction g = adj ? terms_[k]->adjoint_apply(f) : terms_[k]->apply(f);
      g.scale(coeffs_[k]);
      acc += g;
    }
    return acc;
  }
  void combine_d(const std::vector<double>& in, std::vector<double>& out, bool adj) const {
    out.assign(in.size(), 0.0);
    std::vector<double> tmp;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (adj)
        terms_[k]->adjoint_apply(in, tmp);
      else
        terms_[k]->apply(in, tmp);
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += dcoeffs_[k] * tmp[j];
    }
  }

  std::vector<Rational> coeffs_;
  std::vector<LinOpPtr> terms_;
  std::vector<double> dcoeffs_;
};

}  // namespace

LinOpPtr compose(std::vector<LinOpPtr> factors) {
  if (factors.size() == 1) return factors.front();
  return std::make_shared<ComposeOp>(std::move(factors));
}

LinOpPtr lincomb(std::vector<Rational> coeffs, std::vector<LinOpPtr> terms) {
  return std::make_shared<LinCombOp>(std::move(coeffs), std::move(terms));
}

LinOpPtr scaled(const Rational& c, LinOpPtr t) {
  return lincomb({c}, {std::move(t)});
}

std::vector<std::vector<Rational>> materialize(const LinOp& op) {
  std::size_t n = op.dim();
  std::vector<std::vector<Rational>> cols(n);
  BoundaryFunction e(n);
  for (std::size_t j = 0; j < n; ++j) {
    e.numerators()[j] = 1;
    BoundaryFunction col = op.apply(e);
    cols[j].resize(n);
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = col.value(i);
    e.numerators()[j] = 0;
  }
  return cols;
}

std::string matrix_csv(const std::vector<std::vector<Rational>>& m) {
  std::ostringstream os;
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ',';
      os << rat_str(m[j][i]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Deterministic start vector so norm estimates are reproducible run to run.
std::vector<double> seed_vector(std::size_t n) {
  std::vector<double> v(n);
  std::uint64_t s = 0x9e3779b97f4a7c15ull;
  for (auto& x : v) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    x = 2.0 * (static_cast<double>(s >> 11) / 9007199254740992.0) - 1.0;
  }
  return v;
}

}  // namespace

double operator_norm2(const LinOp& op, double tol, int max_iter) {
  std::size_t n = op.dim();
  std::vector<double> v = seed_vector(n), tv, w;
  double norm = std::sqrt(dot(v, v));
  for (auto& x : v) x /= norm;
  double prev = 0;
  for (int it = 0; it < max_iter; ++it) {
    op.apply(v, tv);
    op.adjoint_apply(tv, w);  // w = T*T v
    double rq = dot(v, w);    // Rayleigh quotient, approximates |T|^2
    double wn = std::sqrt(dot(w, w));
    if (wn < 1e-300) return 0.0;
    for (std::size_t k = 0; k < n; ++k) v[k] = w[k] / wn;
    if (it > 0 && std::abs(rq - prev) <= tol * std::max(rq, 1e-30)) {
      return std::sqrt(std::max(rq, 0.0));
    }
    prev = rq;
  }
  return std::sqrt(std::max(prev, 0.0));
}

namespace {

// Presents T* as an operator in its own right.
class AdjointView : public LinOp {
 public:
  explicit AdjointView(LinOpPtr t) : t_(std::move(t)) {}
  std::size_t dim() const override { return t_->dim(); }
  std::string name() const override { return "(" + t_->name() + ")*"; }
  BoundaryFunction apply(const BoundaryFunction& f) const override {
    return t_->adjoint_apply(f);
  }
  void apply(const std::vector<double>& in, std::vector<double>& out) const override {
    t_->adjoint_apply(in, out);
  }
  BoundaryFunction adjoint_apply(const BoundaryFunction& f) const override {
    return t_->apply(f);
  }
  void adjoint_apply(const std::vector<double>& in, std::vector<double>& out) const override {
    t_->apply(in, out);
  }

 private:
  LinOpPtr t_;
};

}  // namespace

LinOpPtr adjoint(LinOpPtr t) { return std::make_shared<AdjointView>(std::move(t)); }

CotlarResult cotlar_bound(const std::vector<LinOpPtr>& ops, double tol) {
  CotlarResult res;
  std::size_t m = ops.size();
  if (m == 0) return res;
  for (std::size_t mu = 0; mu < m; ++mu) {
    double row = 0;
    for (std::size_t la = 0; la < m; ++la) {
      double a = operator_norm2(*compose({ops[mu], adjoint(ops[la])}), tol);
      double b = operator_norm2(*compose({adjoint(ops[mu]), ops[la]}), tol);
      row += std::sqrt(std::max(a, b));
    }
    if (row > res.bound) {
      res.bound = row;
      res.argmax = mu;
    }
  }
  std::vector<Rational> ones(m, Rational(1));
  res.sum_norm = operator_norm2(*lincomb(ones, ops), tol);
  return res;
}

}  // namespace blp
