#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speh/json_io.hpp"

namespace speh {

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  /// Adds a place with |-1| != |1| to the negation_symmetry suite.
  bool inject_broken = false;
};

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  /// First counterexample, null when the suite passed.
  Json counterexample;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// Deterministic in (name, options); throws InvalidArgument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Runs the named suites ("all" expands to every suite) and assembles a report.
Json check_suites(const std::vector<std::string>& names, const SuiteOptions& options);

/// The place used to self-test the negation_symmetry suite.
Place broken_negation_place();

}  // namespace speh
