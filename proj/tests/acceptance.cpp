// Acceptance run: one PASS/FAIL line per criterion. A criterion that finishes
// over its time limit counts as a failure.

#include <iomanip>
#include <iostream>

#include "satdiv/verify.hpp"

int main() {
  using namespace satdiv::verify;
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto r = run_criterion(c);
    const bool pass = r.outcome.pass && r.within_time();
    if (!pass) ++failed;
    std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(4) << r.id << r.title << "  ("
              << std::fixed << std::setprecision(2) << r.seconds << " s, limit " << std::setprecision(0)
              << r.time_limit_seconds << " s)\n";
    if (!pass) {
      std::cout << "       expected: " << r.outcome.expected << "\n"
                << "       actual:   " << r.outcome.actual << "\n";
      if (!r.within_time()) std::cout << "       exceeded the time limit\n";
    }
  }
  std::cout << (criteria().size() - failed) << "/" << criteria().size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
