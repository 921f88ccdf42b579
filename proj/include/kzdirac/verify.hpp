#ifndef KZDIRAC_VERIFY_HPP
#define KZDIRAC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kzdirac {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The acceptance criteria as an executable suite. fast = true runs a reduced
/// sweep (same checks, smaller grids) for quick smoke verification.
std::vector<CheckResult> acceptance_criteria(bool fast = false, std::uint64_t seed = 12345);

bool all_passed(const std::vector<CheckResult>& results);

/// Worker-count cap from KZDIRAC_THREADS (default: hardware concurrency).
std::size_t worker_count();

/// Static work-split parallel map over [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kzdirac

#endif
