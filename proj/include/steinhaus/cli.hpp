#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinhaus {

// Runs one CLI invocation (args exclude the program name). Exit codes:
// 0 = positive result (steinhaus / SAT / colorable), 1 = negative result,
// 2 = usage or limit error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace steinhaus
