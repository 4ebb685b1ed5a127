#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blp {

// Outcome of one named check.  "exact" marks results established by integer /
// rational arithmetic as opposed to floating-point estimates; "error" holds
// the measured discrepancy for the latter.  "ms" is wall time but is always
// serialized as 0 so reports are byte-identical across runs.
struct CheckResult {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status = Status::Pass;
  bool exact = true;
  std::string witness;  // human-readable failure location, empty on pass
  double error = 0.0;
  long ms = 0;

  static CheckResult pass(std::string n) { return {std::move(n), Status::Pass, true, "", 0, 0}; }
  static CheckResult fail(std::string n, std::string w) {
    return {std::move(n), Status::Fail, true, std::move(w), 0, 0};
  }
  static CheckResult skip(std::string n, std::string reason) {
    return {std::move(n), Status::Skip, true, std::move(reason), 0, 0};
  }
  bool ok() const { return status != Status::Fail; }
};

}  // namespace blp
