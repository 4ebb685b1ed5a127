#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "blp/linop.hpp"

using namespace blp;

namespace {

ResolvedConfig small(long p) {
  ModelConfig mc;
  mc.p = p;
  mc.I = 1;
  mc.J = 1;
  return resolve(mc);
}

LinOpPtr level_op(const AtomSpace& atoms, Coweight l) {
  auto spec = PartitionSpec::level(l);
  return std::make_shared<ExpectationOp>(build_partition(atoms, spec), spec.name());
}

BoundaryFunction some_function(std::size_t n) {
  BoundaryFunction f(n);
  for (std::size_t k = 0; k < n; ++k)
    f.numerators()[k] = static_cast<long>((k * 7 + 3) % 23) - 11;
  f.denominator() = 4;
  f.normalize();
  return f;
}

}  // namespace

TEST_CASE("expectation operators are idempotent self-adjoint projections") {
  AtomSpace atoms{small(2)};
  auto e = level_op(atoms, {1, 0});
  auto f = some_function(atoms.atom_count());
  auto ef = e->apply(f);
  CHECK(e->apply(ef) == ef);
  // self-adjointness through the double path as well
  std::vector<double> in = f.to_doubles(), a, b;
  e->apply(in, a);
  e->adjoint_apply(in, b);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]));
  CHECK(operator_norm2(*e) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("compose applies right factor first") {
  AtomSpace atoms{small(2)};
  auto coarse = level_op(atoms, {0, 0});
  auto fine = level_op(atoms, {1, 1});
  auto f = some_function(atoms.atom_count());
  // coarse after fine equals coarse
  auto c = compose({coarse, fine});
  CHECK(c->apply(f) == coarse->apply(f));
}

TEST_CASE("linear combinations") {
  AtomSpace atoms{small(2)};
  auto e = level_op(atoms, {1, 0});
  auto id = std::make_shared<IdentityOp>(atoms.atom_count());
  auto diff = lincomb({1, -1}, {id, e});
  auto f = some_function(atoms.atom_count());
  auto g = diff->apply(f);
  CHECK(g == f - e->apply(f));
  // difference annihilates its own range projection
  CHECK(e->apply(g).is_zero());
  auto zero = lincomb({Rational(1, 2), Rational(-1, 2)}, {e, e});
  CHECK(zero->apply(f).is_zero());
}

TEST_CASE("materialize matches apply and exports CSV") {
  ModelConfig mc;
  mc.p = 2;
  mc.I = 1;
  mc.J = 1;
  AtomSpace atoms{resolve(mc)};
  auto e = level_op(atoms, {1, 1});
  auto m = materialize(*e);
  auto f = some_function(atoms.atom_count());
  auto ef = e->apply(f);
  for (std::size_t i = 0; i < atoms.atom_count(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < atoms.atom_count(); ++j) s += m[j][i] * f.value(j);
    s.canonicalize();
    CHECK(s == ef.value(i));
  }
  auto csv = matrix_csv(m);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(atoms.atom_count()));
  // symmetry of the matrix (self-adjoint under the uniform weight)
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) CHECK(m[i][j] == m[j][i]);
}

TEST_CASE("operator norm on known operators") {
  AtomSpace atoms{small(2)};
  std::size_t n = atoms.atom_count();
  auto id = std::make_shared<IdentityOp>(n);
  CHECK(operator_norm2(*id) == doctest::Approx(1.0).epsilon(1e-9));
  auto half = scaled(Rational(1, 2), id);
  CHECK(operator_norm2(*half) == doctest::Approx(0.5).epsilon(1e-9));
  auto zero = lincomb({1, -1}, {id, id});
  CHECK(operator_norm2(*zero) == doctest::Approx(0.0));
}

TEST_CASE("cotlar bound dominates the sum norm") {
  AtomSpace atoms{small(2)};
  std::vector<LinOpPtr> fam = {level_op(atoms, {1, 0}), level_op(atoms, {0, 1})};
  auto res = cotlar_bound(fam);
  CHECK(res.sum_norm <= res.bound + 1e-6);
  CHECK(res.sum_norm == doctest::Approx(2.0).epsilon(1e-6));

  // singleton family: bound equals the norm
  auto single = cotlar_bound({level_op(atoms, {1, 1})});
  CHECK(single.bound == doctest::Approx(single.sum_norm).epsilon(1e-6));
}

TEST_CASE("adjoint view swaps application direction") {
  AtomSpace atoms{small(2)};
  auto e = level_op(atoms, {1, 0});
  auto id = std::make_shared<IdentityOp>(atoms.atom_count());
  auto t = compose({e, lincomb({Rational(1, 3)}, {id})});
  auto f = some_function(atoms.atom_count());
  CHECK(adjoint(t)->apply(f) == t->adjoint_apply(f));
}
