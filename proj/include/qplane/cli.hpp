#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qplane {

// Runs the qplane command line; args exclude the program name. Output goes
// to `out`, diagnostics to `err`. Exit status: 0 on success with every
// requested check holding, 1 when some check fails, 2 on usage, parse, or
// evaluation errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qplane
