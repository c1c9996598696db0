#pragma once

// Command-line front end: point evaluation (zeta, pcf, mordell), the
// verification suites, and the small-tau convergence benchmark.

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "rsiegel/riemann_siegel.hpp"

namespace rsiegel::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kNoConvergence = 2,
  kDomain = 3,
  kUsage = 64,
};

/// Parses "2", "3i", "-i", "1.5-0.2i", "1e-3+2e1i". Throws
/// std::invalid_argument on anything else.
Complex parse_complex(std::string_view text);

/// {"re", "im", "abs_err", "nodes", "method", "converged"}
nlohmann::json report_to_json(const EvalReport& r);
EvalReport report_from_json(const nlohmann::json& j);

/// Runs one command line (argv[0] is the program name) and returns the
/// process exit code. Nothing is written to std::cout / std::cerr directly.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace rsiegel::cli
