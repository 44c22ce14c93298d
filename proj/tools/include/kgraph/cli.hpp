#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInvalid = 1, kBound = 2 };

/// Runs the kgraph command line. args excludes the program name.
/// Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli
