#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace termrank::cli {

// Dispatches one command line (without the program name). Returns 0 on
// success, 1 on domain errors (infeasible class, invalid input), 2 on usage
// errors. `--json` switches every subcommand to the machine-readable schema.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace termrank::cli
