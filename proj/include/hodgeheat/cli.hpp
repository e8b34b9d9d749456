#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgeheat {

/// Runs the command-line interface on the given arguments (no program
/// name). Exit codes: 0 success, 1 input or usage error, 2 a verified bound
/// was violated (dgg-check / sweep).
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

struct CommandCoverage {
  std::string subcommand;
  std::vector<std::string> operations;
};

/// Which library operation each subcommand exposes; every operation appears
/// under exactly one subcommand.
const std::vector<CommandCoverage>& command_table();

}  // namespace hodgeheat
