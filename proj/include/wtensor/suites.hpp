#pragma once

#include <wtensor/report.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wtensor {

// Shared configuration for the curated verification suites. The seed fully
// determines every randomized choice; `full` switches from the quick trial
// counts (CLI default, < 60 s total) to the documented full budgets
// (acceptance run, < 15 min total).
struct VerifyOptions {
  bool full = false;
  std::uint64_t seed = 42;
};

struct Suite {
  std::string name;
  std::string summary;
  std::function<Report(const VerifyOptions&)> run;
};

// The thirteen curated suites in their fixed order. `verify all` and the
// acceptance runner both iterate this registry, so report order never
// depends on completion order.
const std::vector<Suite>& suite_registry();

struct VerifyOutcome {
  std::vector<Report> reports;  // registry order
  bool all_pass = true;
};

VerifyOutcome verify_all(const VerifyOptions& opt);

}  // namespace wtensor
