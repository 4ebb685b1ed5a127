#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blp/check.hpp"
#include "blp/operators.hpp"

namespace blp {

struct SuiteReport {
  std::string suite;
  ResolvedConfig config;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  long pass = 0, fail = 0, skipped = 0;

  void add(CheckResult c);
  bool ok() const { return fail == 0; }
};

// Small deterministic generator (splitmix64) so reports do not depend on the
// platform's std::mt19937 stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [lo, hi], inclusive.
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

// Random function with numerators in [-16, 16] and denominator p^e,
// e in {0,1,2}; constant on the cells of `measurability` when given.
BoundaryFunction random_function(const Toolkit& tk, std::uint64_t seed,
                                 const std::optional<PartitionSpec>& measurability = {},
                                 bool nonnegative = false);

// One coefficient per interior grid point, measurable one step below it,
// with sup-norm <= bound.
CoefficientFamily predictable_coefficients(const Toolkit& tk, std::uint64_t seed,
                                           const Rational& bound);

std::vector<std::string> suite_catalog();

SuiteReport run_suite(const std::string& name, const ModelConfig& cfg,
                      std::uint64_t seed);

std::string report_json(const SuiteReport& rep);
std::string report_csv(const SuiteReport& rep);

}  // namespace blp
