#ifndef TFORGE_CLI_HPP
#define TFORGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tforge::cli
{

  enum ExitCode : int
  {
    kSuccess = 0,
    kRejected = 1,
    kInputError = 2
  };

  /// Runs one subcommand; args excludes the program name. Reports go to `out`
  /// (or the --out file), diagnostics to `err`.
  int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tforge::cli

#endif
