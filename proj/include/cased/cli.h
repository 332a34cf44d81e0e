#ifndef CASED_CLI_H
#define CASED_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace cased {

/// Command-line driver.  Subcommands: validate, solve, oracle, render, gen.
/// Exit codes: 0 success, 1 usage (including objective/model pairs the
/// problem list leaves open), 2 validation error, 3 budget or cap exceeded.
/// Result payloads go to files or `out`; diagnostics go to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cased

#endif
