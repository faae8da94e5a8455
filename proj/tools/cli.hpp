#ifndef UCPOLY_TOOLS_CLI_HPP
#define UCPOLY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ucpoly::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2 };

/// Runs one ucpoly invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace ucpoly::cli

#endif  // UCPOLY_TOOLS_CLI_HPP
