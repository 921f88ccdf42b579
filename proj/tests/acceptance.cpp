// Acceptance suite runner: one line per criterion, nonzero exit on failure.
#include <cstdio>
#include <cstring>

#include "kzdirac/verify.hpp"

int main(int argc, char** argv) {
  bool fast = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--fast") == 0) fast = true;
  const auto results = kzdirac::acceptance_criteria(fast);
  for (const auto& r : results)
    std::printf("[%s] %-45s (%6.1fs)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
  const bool ok = kzdirac::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: ALL CRITERIA PASSED" : "acceptance: FAILURES PRESENT");
  return ok ? 0 : 1;
}
