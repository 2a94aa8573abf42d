#include <cstdio>
#include <string>
#include <vector>

#include "icox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  icox::CommandOutcome outcome = icox::run_cli(args);
  std::fwrite(outcome.report.data(), 1, outcome.report.size(),
              outcome.exit_code == 0 ? stdout : stderr);
  return outcome.exit_code;
}
