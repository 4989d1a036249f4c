#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pairzeta {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 2, kExitNonGeneric = 3, kExitCheckFailed = 4 };

// Runs one command. args excludes the program name. Results go to out,
// diagnostics and progress to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairzeta
