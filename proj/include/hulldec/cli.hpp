#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hulldec::cli {

// Runs one subcommand. Arguments exclude the program name. Returns the
// process exit code: 0 success, 2 typed infeasibility / not-majorized
// verdicts, 1 malformed input. Errors emit one-line JSON on err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hulldec::cli
