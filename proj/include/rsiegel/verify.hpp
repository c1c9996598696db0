#pragma once

// Identity-verification suites. Every check evaluates one identity over a
// small grid and reports the worst residual found.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsiegel {

struct CheckRow {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;  // free text, e.g. node counts
};

/// Names of every check, in run order.
std::vector<std::string> verify_check_names();

/// Runs the checks whose name starts with `filter` (all when empty).
///
/// `tolerance_override` replaces each check's own threshold. `seed` drives
/// the sampled grids, so two runs with the same seed are identical.
std::vector<CheckRow> run_verify(const std::string& filter = "",
                                 std::optional<double> tolerance_override = {},
                                 std::uint64_t seed = 20240601);

}  // namespace rsiegel
