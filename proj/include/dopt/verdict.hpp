#pragma once

#include <string>
#include <utility>

namespace dopt {

// Check result carrying the first counterexample found, so corpus
// regressions point straight at the offending difference or matrix entry.
struct Verdict {
  bool ok = true;
  std::string check;   // which check ran (or failed)
  std::string detail;  // first counterexample; empty on pass

  explicit operator bool() const { return ok; }

  static Verdict pass(std::string check) {
    return Verdict{true, std::move(check), {}};
  }
  static Verdict fail(std::string check, std::string detail) {
    return Verdict{false, std::move(check), std::move(detail)};
  }
};

}  // namespace dopt
