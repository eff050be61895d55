#pragma once

#include <iosfwd>

#include "hrange/cover.hpp"

namespace hrange::verify {

struct SuiteOptions {
  i64 max_entries = CoverLimits{}.max_entries;
  int threads = 2;
};

inline constexpr int kCriterionCount = 7;

// Runs one numbered criterion of the published-results suite, printing
// one line per fixture and a summary line. Returns true iff it passed.
bool run_criterion(int n, std::ostream& out, const SuiteOptions& opt = {});

// Runs all criteria in order; true iff every one passed.
bool run_paper_suite(std::ostream& out, const SuiteOptions& opt = {});

}  // namespace hrange::verify
