#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "blp/verify.hpp"

using namespace blp;

namespace {

ModelConfig small_cfg(long p = 2) {
  ModelConfig mc;
  mc.p = p;
  mc.I = 1;
  mc.J = 1;
  return mc;
}

}  // namespace

TEST_CASE("random functions are deterministic and respect constraints") {
  Toolkit tk{resolve(small_cfg())};
  auto f1 = random_function(tk, 42);
  auto f2 = random_function(tk, 42);
  CHECK(f1 == f2);
  auto f3 = random_function(tk, 43);
  CHECK(f1 != f3);

  auto spec = PartitionSpec::level({1, 0});
  auto g = random_function(tk, 7, spec);
  CHECK(tk.measurable(g, spec));

  auto h = random_function(tk, 7, {}, /*nonneg=*/true);
  CHECK(h.nonnegative());
}

TEST_CASE("predictable coefficients are bounded and measurable") {
  ModelConfig mc = small_cfg();
  mc.I = 2;
  mc.J = 2;
  Toolkit tk{resolve(mc)};
  auto fam = predictable_coefficients(tk, 5, Rational(1, 2));
  auto fam2 = predictable_coefficients(tk, 5, Rational(1, 2));
  CHECK(fam.points.size() == tk.interior_grid().size());
  for (std::size_t k = 0; k < fam.points.size(); ++k) {
    CHECK(fam.values[k] == fam2.values[k]);
    CHECK(tk.linf_norm(fam.values[k]) <= Rational(1, 2));
    auto below = PartitionSpec::level(fam.points[k] - lambda1 - lambda2);
    CHECK(tk.measurable(fam.values[k], below));
  }
  CHECK_THROWS_AS(predictable_coefficients(tk, 5, Rational(0)), std::invalid_argument);
}

TEST_CASE("catalog and unknown suites") {
  auto names = suite_catalog();
  CHECK(names.size() == 24);
  CHECK(std::find(names.begin(), names.end(), "prop2-calderon") != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", small_cfg(), 0), std::invalid_argument);
}

TEST_CASE("exact suites pass on the small model") {
  for (const auto& name :
       {"prop0-nesting", "lemma1-eq23", "lemma5", "eq10-isometry", "prop2-calderon",
        "f4-fails", "thm2-reconstruction"}) {
    auto rep = run_suite(name, small_cfg(), 7);
    CHECK(rep.ok());
    CHECK(rep.pass > 0);
  }
}

TEST_CASE("grid without interior points reports skips, not passes") {
  ModelConfig mc;
  mc.p = 2;
  mc.I = 0;
  mc.J = 0;
  auto rep = run_suite("eq46-48", mc, 1);
  CHECK(rep.fail == 0);
  CHECK(rep.skipped == 1);
  CHECK(rep.pass == 0);
}

TEST_CASE("reports are byte identical across runs") {
  auto a = run_suite("lemma1-eq23", small_cfg(3), 9);
  auto b = run_suite("lemma1-eq23", small_cfg(3), 9);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("json report carries the schema fields") {
  auto rep = run_suite("f4-fails", small_cfg(), 3);
  auto s = report_json(rep);
  for (const char* key :
       {"\"suite\"", "\"config\"", "\"seed\"", "\"checks\"", "\"summary\"", "\"ms\": 0",
        "\"kind\"", "\"witness\""}) {
    INFO(key);
    CHECK(s.find(key) != std::string::npos);
  }
  auto csv = report_csv(rep);
  CHECK(csv.rfind("suite,name,status,kind,error,witness,ms\n", 0) == 0);
}

TEST_CASE("summary bookkeeping") {
  SuiteReport rep;
  rep.add(CheckResult::pass("a"));
  rep.add(CheckResult::fail("b", "atom=3"));
  rep.add(CheckResult::skip("c", "why"));
  CHECK(rep.pass == 1);
  CHECK(rep.fail == 1);
  CHECK(rep.skipped == 1);
  CHECK(!rep.ok());
}
