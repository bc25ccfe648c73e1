// Seeded invariant suites behind the `check` command.
//
// Each suite replays the defining laws of one part of the library on
// deterministic random instances and reports one result per invariant.  The
// quasisum suite intentionally contains an expected-inequality case: the
// block sum is compatible with stacking but not with side-by-side placement,
// and the suite passes only when the known counterexample actually fails.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prokit {

struct CheckResult {
  std::string suite;
  std::string invariant;
  bool passed = false;
  std::string witness;  // failure details; empty when passed
};

// Names accepted by run_check_suite, with "all" last.
const std::vector<std::string>& check_suite_names();

// Runs one named suite (or "all" for every suite in order) with the given
// seed.  Unknown names raise value_error.
std::vector<CheckResult> run_check_suite(const std::string& suite,
                                         std::uint64_t seed);

}  // namespace prokit
