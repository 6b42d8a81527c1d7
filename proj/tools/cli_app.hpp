#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktree::cli {

/// Parses the command line and dispatches to a subcommand. Returns the
/// process exit code: 0 success, 1 runtime failure, 2 bad usage or input,
/// 3 a pipeline check outside its tolerance.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktree::cli
