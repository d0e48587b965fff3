#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diskcover::harness {

struct VerifyOptions {
  std::size_t trials = 100;
  std::size_t n_max = 20;
  std::size_t m_max = 2;
  std::uint64_t seed = 0;
  double time_budget_s = 0.0;  // 0 = unlimited; trials past the budget are skipped
};

struct VerifyReport {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;  // one reproducer line per failed trial

  [[nodiscard]] bool ok() const { return failed == 0; }
};

/// Per trial: a random instance (n in [1, n_max], m in [1, m_max], side in
/// [1, 8]); checks that the neighborhood solver matches exhaustive
/// enumeration, the 21*rho*(i-1) neighborhood bound, and the
/// Cover/ExclusiveCover identities on the disks of both solutions.
[[nodiscard]] VerifyReport verify(const VerifyOptions& options);

/// Instance parameters used by trial `trial` of a verify run.
struct TrialSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  double side = 0.0;
  std::uint64_t seed = 0;
};
[[nodiscard]] TrialSpec trial_spec(const VerifyOptions& options, std::size_t trial);

}  // namespace diskcover::harness
