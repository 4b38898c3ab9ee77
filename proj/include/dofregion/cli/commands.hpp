#ifndef DOFREGION_CLI_COMMANDS_HPP
#define DOFREGION_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dofregion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,  // inseparable, not a polymatroid, or FAIL
  kParseError = 2,
  kInvalidArgument = 3,
  kNotTotallyOrdered = 4,
  kTupleOutsideOuterBound = 5,
};

enum class Format { Table, Structured };

struct Options {
  std::string command;
  std::string pattern_path;
  Format format = Format::Table;
  std::string kind = "outer";
  std::string subset;
  std::string export_plot;
  int max_users = 6;
  std::vector<std::string> values;  // positional rationals
};

/// Runs one parsed command. Never throws; failures map to exit codes.
int run_command(const Options& options, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dofregion::cli

#endif  // DOFREGION_CLI_COMMANDS_HPP
