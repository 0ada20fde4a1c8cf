#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace evec {

// Outcome of one CLI invocation. The machine document and the human text
// carry the same numbers; with --json the machine document is what gets
// printed, otherwise the human text.
struct CommandResult {
    int exit_code = 0;  // 0 ok, 1 usage/parse, 2 precondition, 3 property violation
    nlohmann::json machine;
    std::string human;
};

// Executes exactly one subcommand. `args` excludes the program name.
// Prints the selected report form to `out` and diagnostics to `err`.
CommandResult run_command(const std::vector<std::string>& args,
                          std::ostream& out, std::ostream& err);

}  // namespace evec
