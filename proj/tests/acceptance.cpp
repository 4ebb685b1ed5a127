// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "blp/verify.hpp"

using namespace blp;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s%s%s\n", n, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

ModelConfig big2() {
  ModelConfig mc;
  mc.p = 2;
  mc.I = 2;
  mc.J = 2;
  return mc;
}

ModelConfig small3() {
  ModelConfig mc;
  mc.p = 3;
  mc.I = 1;
  mc.J = 1;
  return mc;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs a list of suites on one config; returns false and fills detail on the
// first failing or inexact-error check.
bool run_all(const std::vector<std::string>& names, const ModelConfig& cfg,
             bool require_zero_error, std::string& detail) {
  for (const auto& name : names) {
    auto rep = run_suite(name, cfg, 42);
    if (!rep.ok()) {
      for (const auto& c : rep.checks)
        if (c.status == CheckResult::Status::Fail) {
          detail = name + "/" + c.name + " [" + c.witness + "]";
          return false;
        }
    }
    if (require_zero_error)
      for (const auto& c : rep.checks)
        if (c.exact && c.error != 0.0) {
          detail = name + "/" + c.name + " error nonzero";
          return false;
        }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::string> exact_suites = {
      "prop0-nesting", "lemma1-eq1",     "lemma1-eq23", "lemma4-eq6",
      "lemma3-eq7",    "lemma5",         "lemma2-eq8",  "eq10-isometry",
      "prop2-calderon", "eq22",          "eq46-48",     "thm2-reconstruction",
      "f4-fails"};

  // 1: exact identity suites, both configs, < 60 s each
  {
    bool ok = true;
    std::string detail;
    for (const auto& cfg : {big2(), small3()}) {
      auto t0 = std::chrono::steady_clock::now();
      if (!run_all(exact_suites, cfg, true, detail)) {
        ok = false;
        break;
      }
      double dt = seconds_since(t0);
      if (dt >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + " s";
        break;
      }
      if (detail.empty()) detail = "runtime " + std::to_string(dt) + " s";
    }
    report(1, ok, detail);
  }

  // 2: exact atomwise inequalities on non-negative samples
  {
    std::string detail;
    bool ok = run_all({"lemma2-positivity", "thm1-pointwise"}, big2(), false, detail) &&
              run_all({"lemma2-positivity", "thm1-pointwise"}, small3(), false, detail);
    report(2, ok, detail);
  }

  // 3: squared-rational decay inequality
  {
    std::string detail;
    bool ok = run_all({"prop1-decay"}, big2(), false, detail) &&
              run_all({"prop1-decay"}, small3(), false, detail);
    report(3, ok, detail);
  }

  // 4: L2 maximal bound with constant 2
  {
    std::string detail;
    bool ok = run_all({"doob"}, big2(), false, detail) &&
              run_all({"doob"}, small3(), false, detail);
    report(4, ok, detail);
  }

  // 5: operator-norm decay tables with calibrated constant
  {
    std::string detail;
    bool ok = run_all({"prop3-decay"}, big2(), false, detail);
    report(5, ok, detail);
  }

  // 6: projective plane checks and the path-count reconciliation, < 5 s
  {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = run_all({"plane", "cross-model"}, big2(), false, detail);
    double dt = seconds_since(t0);
    if (ok && dt >= 5.0) {
      ok = false;
      detail = "runtime " + std::to_string(dt) + " s";
    }
    report(6, ok, detail);
  }

  // 7: almost-orthogonality bound with unit sum norm
  {
    std::string detail;
    bool ok = run_all({"cotlar"}, big2(), false, detail) &&
              run_all({"cotlar"}, small3(), false, detail);
    report(7, ok, detail);
  }

  // 8: empirical ratio suites: finite, seed-stable, bounded growth
  {
    std::string detail;
    bool ok = run_all({"thm1-empirical", "thm2-empirical", "transform-bound"}, big2(),
                      false, detail);
    report(8, ok, detail);
  }

  // 9: byte-identical reports across two identical runs of the full catalog
  {
    ModelConfig mc;
    mc.p = 2;
    mc.I = 1;
    mc.J = 1;
    std::string a, b;
    for (const auto& name : suite_catalog()) a += report_json(run_suite(name, mc, 7));
    for (const auto& name : suite_catalog()) b += report_json(run_suite(name, mc, 7));
    report(9, a == b && !a.empty(), "");
  }

  return failures == 0 ? 0 : 1;
}
