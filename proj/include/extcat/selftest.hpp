#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace extcat {

/// One invariant of the battery. `run(n)` returns a description of the first
/// counterexample in S_n (global order), or nothing when the invariant holds.
struct SelftestCheck {
  std::string name;
  int min_n;
  int max_n;
  std::function<std::optional<std::string>(int n)> run;
};

const std::vector<SelftestCheck>& selftest_checks();

inline constexpr int kSelftestMinRank = 3;
inline constexpr int kSelftestMaxRank = 7;

/// Runs every check for min_n <= n <= min(max_n, check.max_n), printing one
/// line per check. Returns 0 when everything passes and 3 otherwise.
/// Throws std::invalid_argument unless 3 <= max_n <= 7.
int selftest(int max_n, std::ostream& out);

}  // namespace extcat
