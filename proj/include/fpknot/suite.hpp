#ifndef FPKNOT_SUITE_HPP
#define FPKNOT_SUITE_HPP

#include <string>
#include <vector>

#include "fpknot/coset_table.hpp"

namespace fpknot {

struct SuiteCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_pass = false;
};

struct SuiteOptions {
  EnumLimits limits;
  // Deliberately corrupts one built presentation so that the reporting and
  // exit-code paths under failure can be exercised.
  bool inject_fault = false;
};

// The built-in verification battery: every group-theoretic value the toolkit
// is expected to reproduce, plus randomized property suites (fixed seed).
SuiteReport run_verification_suite(const SuiteOptions& options = {});

}  // namespace fpknot

#endif  // FPKNOT_SUITE_HPP
