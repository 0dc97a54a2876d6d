#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partbij::cli {

enum exit_code : int { success = 0, verification_failed = 1, usage_error = 2 };

/* Runs one invocation. args[0] is the program name. Results go to out,
 * diagnostics to err. */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace partbij::cli
