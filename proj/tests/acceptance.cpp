// Acceptance runner: executes every verification suite at full level with a
// pinned seed and prints exactly one PASS/FAIL line per criterion, enforcing
// the per-criterion wall-clock budget. Exit code 0 iff all criteria hold.
#include <wtensor/suites.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

int main() {
  using namespace wtensor;
  const std::vector<double> budget_s = {5, 5, 10, 60, 120, 30, 30, 10, 10, 10, 60, 60, 30};
  VerifyOptions opt;
  opt.full = true;
  opt.seed = 42;

  const auto& registry = suite_registry();
  if (registry.size() != budget_s.size()) {
    std::fprintf(stderr, "registry has %zu suites, expected %zu\n", registry.size(),
                 budget_s.size());
    return 1;
  }

  bool all_pass = true;
  for (size_t i = 0; i < registry.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Report rep = registry[i].run(opt);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < budget_s[i];
    const bool ok = rep.pass && in_budget;
    all_pass = all_pass && ok;
    std::printf("%s — %2zu. %s (%lld checks, %.2fs%s)\n", ok ? "PASS" : "FAIL", i + 1,
                registry[i].name.c_str(), rep.checks, secs,
                in_budget ? "" : ", OVER BUDGET");
    if (!rep.pass && !rep.counterexample.is_null())
      std::printf("      counterexample: %s\n", rep.counterexample.dump().c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return all_pass ? 0 : 1;
}
