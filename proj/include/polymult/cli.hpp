// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 computation refused or a check failed, 2 usage or parse error.

#ifndef POLYMULT_CLI_HPP_
#define POLYMULT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace polymult {

enum ExitCode : int { kExitOk = 0, kExitRefused = 1, kExitUsage = 2 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymult

#endif  // POLYMULT_CLI_HPP_
