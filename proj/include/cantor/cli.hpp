#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor {

// Runs one command line (args without the program name). Output goes to
// `out`, diagnostics to `err`. Returns the process exit code:
//   0  success
//   1  computation or contract error (e.g. unattainable precision)
//   2  usage error
// Output is a pure function of the arguments: no clocks, no locale, no
// ambient state.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace cantor
