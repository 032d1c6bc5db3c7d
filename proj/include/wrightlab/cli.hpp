#ifndef WRIGHTLAB_CLI_HPP
#define WRIGHTLAB_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wrightlab/scalar.hpp"

namespace wrightlab::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,          // bad arguments, unknown function, malformed config or report
    kDomain = 2,         // parameters outside the validity region, poles
    kConvergence = 3,    // series or quadrature did not converge, overflow
    kVerifyFailed = 4,   // verify finished but some record is fail or error
};

/// Parses "1.5", "-2", "0.5+0.5i", "-1.2i", "i".
Complex parse_complex(const std::string& text);

/// Names accepted by `eval`.
std::vector<std::string> eval_function_names();

/// Evaluates one function and prints a single line to `out`; returns the exit code.
int cmd_eval(const std::string& function, const std::map<std::string, std::string>& args, std::ostream& out,
             std::ostream& err);

/// Full command line (argv[0] included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wrightlab::cli

#endif
