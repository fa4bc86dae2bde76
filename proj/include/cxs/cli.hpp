#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cxs {

// Runs one command (argument vector without the program name), writing the
// report to `out` and diagnostics to `err`; documents given as "-" are read
// from `in`. Returns the process exit status: 0 success, 2 domain or
// precondition errors, 3 budget exhaustion, 64 usage errors, 65 unreadable
// or malformed documents, 70 internal invariant failures.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cxs
