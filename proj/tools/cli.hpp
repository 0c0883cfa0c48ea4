#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhalf::cli {

/// Runs the command line tool on the given arguments (program name already
/// stripped). Prints one JSON report to `out` on success or check failure,
/// diagnostics to `err` otherwise. Returns the process exit code: 0 when
/// every embedded check passed, 1 when a check failed, 2 on usage errors or
/// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhalf::cli
