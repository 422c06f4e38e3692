#ifndef MCRES_CLI_HPP
#define MCRES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mcres {

/// Runs the command line (arguments without the program name). Exit codes:
/// 0 success, 1 a verified property failed, 2 bad input or usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcres

#endif
