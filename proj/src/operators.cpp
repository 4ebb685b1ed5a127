#include "blp/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace blp {

Toolkit::Toolkit(const ResolvedConfig& cfg) : cfg_(cfg), atoms_(cfg) {}

const Partition& Toolkit::partition(const PartitionSpec& spec) const {
  auto key = spec.name();
  auto it = parts_.find(key);
  if (it == parts_.end()) it = parts_.emplace(key, build_partition(atoms_, spec)).first;
  return it->second;
}

LinOpPtr Toolkit::expectation(const PartitionSpec& spec) const {
  auto key = spec.name();
  auto it = ops_.find(key);
  if (it == ops_.end()) {
    auto op = std::make_shared<ExpectationOp>(partition(spec), "E[" + key + "]");
    it = ops_.emplace(key, std::move(op)).first;
  }
  return it->second;
}

LinOpPtr Toolkit::L(long i) const {
  if (i < cfg_.i0 || i > cfg_.A) throw std::invalid_argument("L index out of range");
  if (i == cfg_.i0) return row(i);
  return lincomb({1, -1}, {row(i), row(i - 1)});
}

LinOpPtr Toolkit::R(long j) const {
  if (j < cfg_.j0 || j > cfg_.B) throw std::invalid_argument("R index out of range");
  if (j == cfg_.j0) return col(j);
  return lincomb({1, -1}, {col(j), col(j - 1)});
}

LinOpPtr Toolkit::D(Coweight l) const { return compose({L(l.i), R(l.j)}); }

LinOpPtr Toolkit::Dstar(Coweight l) const { return compose({R(l.j), L(l.i)}); }

bool Toolkit::dd_defined(Coweight l) const {
  return representable(cfg_, PartitionSpec::level(l)) &&
         representable(cfg_, PartitionSpec::level(l - lambda1 - lambda2));
}

LinOpPtr Toolkit::dd(Coweight l) const {
  if (!dd_defined(l)) throw std::invalid_argument("dd undefined at " + to_string(l));
  return lincomb({1, -1, -1, 1}, {level(l), level(l - lambda1), level(l - lambda2),
                                  level(l - lambda1 - lambda2)});
}

std::vector<Coweight> Toolkit::grid() const {
  std::vector<Coweight> out;
  for (long i = cfg_.i0; i <= cfg_.I; ++i)
    for (long j = cfg_.j0; j <= cfg_.J; ++j) out.push_back({i, j});
  return out;
}

std::vector<Coweight> Toolkit::full_rect() const {
  std::vector<Coweight> out;
  for (long i = cfg_.i0; i <= cfg_.A; ++i)
    for (long j = cfg_.j0; j <= cfg_.B; ++j) out.push_back({i, j});
  return out;
}

std::vector<Coweight> Toolkit::interior_grid() const {
  std::vector<Coweight> out;
  for (long i = cfg_.i0 + 1; i <= cfg_.I; ++i)
    for (long j = cfg_.j0 + 1; j <= cfg_.J; ++j) out.push_back({i, j});
  return out;
}

BoundaryFunction Toolkit::maximal(const BoundaryFunction& f, MaximalKind kind) const {
  std::vector<BoundaryFunction> candidates;
  // The grid maximal function takes |E f|; the one-parameter row/column
  // maximal functions average |f| first.
  switch (kind) {
    case MaximalKind::Grid:
      for (Coweight l : grid()) candidates.push_back(level(l)->apply(f).abs());
      break;
    case MaximalKind::RowAll: {
      BoundaryFunction a = f.abs();
      for (long i = cfg_.i0; i <= cfg_.A; ++i) candidates.push_back(row(i)->apply(a));
      break;
    }
    case MaximalKind::ColAll: {
      BoundaryFunction a = f.abs();
      for (long j = cfg_.j0; j <= cfg_.B; ++j) candidates.push_back(col(j)->apply(a));
      break;
    }
  }
  return BoundaryFunction::pointwise_max(candidates);
}

SquareResult Toolkit::square_function(const BoundaryFunction& f, SquareKind kind) const {
  SquareResult res;
  res.interior_sum_sq = BoundaryFunction(f.size());
  res.boundary_sum_sq = BoundaryFunction(f.size());
  auto add_sq = [](BoundaryFunction& acc, const BoundaryFunction& g) {
    acc += g.pointwise_product(g);
  };

  if (kind == SquareKind::Difference) {
    for (Coweight l : interior_grid()) add_sq(res.interior_sum_sq, dd(l)->apply(f));
    // Boundary family of the grid: one-parameter differences along the two
    // edges plus the coarse corner expectation.
    Coweight c0{cfg_.i0, cfg_.j0};
    for (long i = cfg_.i0 + 1; i <= cfg_.I; ++i) {
      auto g = lincomb({1, -1}, {level({i, cfg_.j0}), level({i - 1, cfg_.j0})})->apply(f);
      add_sq(res.boundary_sum_sq, g);
    }
    for (long j = cfg_.j0 + 1; j <= cfg_.J; ++j) {
      auto g = lincomb({1, -1}, {level({cfg_.i0, j}), level({cfg_.i0, j - 1})})->apply(f);
      add_sq(res.boundary_sum_sq, g);
    }
    add_sq(res.boundary_sum_sq, level(c0)->apply(f));
    return res;
  }

  for (Coweight l : full_rect()) {
    auto op = (kind == SquareKind::Calderon) ? D(l) : Dstar(l);
    add_sq(res.interior_sum_sq, op->apply(f));
  }
  return res;
}

BoundaryFunction Toolkit::martingale_transform(const BoundaryFunction& f,
                                               const CoefficientFamily& coeffs) const {
  if (coeffs.points.size() != coeffs.values.size())
    throw std::invalid_argument("coefficient family size mismatch");
  BoundaryFunction acc(f.size());
  for (std::size_t k = 0; k < coeffs.points.size(); ++k) {
    Coweight l = coeffs.points[k];
    auto below = PartitionSpec::level(l - lambda1 - lambda2);
    if (!measurable(coeffs.values[k], below))
      throw std::invalid_argument("coefficient at " + to_string(l) +
                                  " is not predictable");
    acc += coeffs.values[k].pointwise_product(dd(l)->apply(f));
  }
  return acc;
}

LinOpPtr Toolkit::calderon_sum() const {
  std::vector<LinOpPtr> terms;
  for (Coweight l : full_rect()) terms.push_back(compose({D(l), Dstar(l)}));
  std::vector<Rational> ones(terms.size(), Rational(1));
  return lincomb(std::move(ones), std::move(terms));
}

bool Toolkit::measurable(const BoundaryFunction& f, const PartitionSpec& spec) const {
  return cond_expect(partition(spec), f) == f;
}

Rational Toolkit::lp_power_exact(const BoundaryFunction& f, long m) const {
  if (m < 1) throw std::invalid_argument("power must be >= 1");
  Integer sum = 0, term;
  for (const auto& x : f.numerators()) {
    mpz_pow_ui(term.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_abs(term.get_mpz_t(), term.get_mpz_t());
    sum += term;
  }
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), f.denominator().get_mpz_t(), static_cast<unsigned long>(m));
  Rational r(sum, den);
  r.canonicalize();
  r *= atoms_.atom_measure();
  r.canonicalize();
  return r;
}

double Toolkit::lp_norm(const BoundaryFunction& f, double p) const {
  double mu = atoms_.atom_measure().get_d();
  double sum = 0;
  for (double x : f.to_doubles()) sum += std::pow(std::abs(x), p);
  return std::pow(sum * mu, 1.0 / p);
}

Rational Toolkit::linf_norm(const BoundaryFunction& f) const {
  Rational m = f.abs().max_value();
  return m;
}

Rational Toolkit::inner_product(const BoundaryFunction& f, const BoundaryFunction& g) const {
  if (f.size() != g.size()) throw std::invalid_argument("size mismatch");
  Integer sum = 0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += f.numerators()[k] * g.numerators()[k];
  Rational r(sum, f.denominator() * g.denominator());
  r.canonicalize();
  r *= atoms_.atom_measure();
  r.canonicalize();
  return r;
}

}  // namespace blp
