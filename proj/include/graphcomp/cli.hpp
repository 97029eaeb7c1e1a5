#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcomp {

/**
 * Runs the graphcomp command-line tool. `args` is the full argv, program
 * name included. Graph input requested with --stdin is read from `in`.
 * Returns the process exit code: 0 on success, 1 on any error, 2 when
 * --all-methods (or atable --both) detects a disagreement.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

} // namespace graphcomp
