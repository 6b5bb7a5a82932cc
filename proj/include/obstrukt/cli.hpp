#ifndef OBSTRUKT_CLI_HPP
#define OBSTRUKT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace obstrukt {

// Entry point of the obstrukt command line tool. args[0] is the program name.
// JSON goes to out, diagnostics to err. Exit codes: 0 success, 1 a negative
// result (failed check, unexpected verdict, exceeded budget), 2 usage,
// parse or validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obstrukt

#endif  // OBSTRUKT_CLI_HPP
