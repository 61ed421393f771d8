#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusionkit {

// Batch front end.  `args` excludes the program name.  Returns the process
// exit code: 0 on success, 1 on verification failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fusionkit
