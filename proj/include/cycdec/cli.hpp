#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycdec {

// Full command-line driver, factored out of main() so tests can call it
// with captured streams.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 domain failure (infeasible, impossible,
// invalid input data), 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

} // namespace cycdec
