#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcd {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1,
  kExitUsage = 2,
  kExitScaleGuard = 3,
};

/// Runs one lcdtool command. `args` excludes the program name. Errors are
/// reported on `err` as a single "ERROR <code>: <message>" line.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace lcd
