#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nomsets {

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  bool passed = true;
  std::string counterexample;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const CheckResult& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Property suites runnable from the CLI. Deterministic given the seed.
/// Suites: actions, supports, adjunction, monoidal, onedim, automata,
/// extension, counterexamples, all. Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed,
                      std::size_t samples);

std::vector<std::string> suite_names();

}  // namespace nomsets
