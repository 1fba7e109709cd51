#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlace {

/// Runs the command-line front end. args excludes the program name.
/// Returns 0 on success, 1 on a computation-domain error (malformed file,
/// width violation, non-matroid input, failing check suite), 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlace
