#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ck::cli {

// Runs one command line (args excludes the program name). The result goes to
// `out`, metadata and diagnostics to `err`. Returns the exit status:
// 0 ok, 2 usage or precondition, 3 indeterminate, 4 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ck::cli
