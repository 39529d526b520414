#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tess::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNotExists = 3,
  kFailure = 4,
};

/// Runs `tessarine <subcommand> ...`; args excludes the program name.
/// Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tess::cli
