#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncsimo::suite {

// One property check. Diagnostics (asserted = false) are reported but never
// fail a suite.
struct Check {
  std::string name;
  bool passed = false;
  bool asserted = true;
  std::optional<double> value;
  std::optional<double> limit;
  std::optional<double> slack;
  std::optional<double> margin;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  std::size_t failures() const;
  // Asserted checks whose name starts with `prefix`.
  bool passed(const std::string& prefix) const;
  std::size_t count(const std::string& prefix) const;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int workers = 1;
  std::size_t trials = 0;  // 0 selects the suite default
};

SuiteResult run_region(const SuiteOptions& opts);
SuiteResult run_optimizer(const SuiteOptions& opts);
SuiteResult run_lemmas(const SuiteOptions& opts);
SuiteResult run_props(const SuiteOptions& opts);
SuiteResult run_validity(const SuiteOptions& opts);
SuiteResult run_achievability(const SuiteOptions& opts);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace ncsimo::suite
