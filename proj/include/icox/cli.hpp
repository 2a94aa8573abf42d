#pragma once

#include <string>
#include <vector>

namespace icox {

// Exit contract: 0 success / all checks pass, 1 validation or check
// failure, 2 usage or parse error, 3 inconclusive certification.
struct CommandOutcome {
  int exit_code = 0;
  std::string report;
};

// Runs one CLI invocation (args excludes the program name). Deterministic:
// identical inputs produce byte-identical reports.
CommandOutcome run_cli(const std::vector<std::string>& args);

}  // namespace icox
