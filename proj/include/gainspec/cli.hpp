#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainspec {

/// Command dispatch behind the `gainspec` binary. `args` excludes argv[0].
/// Reads the graph file named in the arguments ("-" means `input`), writes
/// JSON (or a gain graph file, for `complete`) to `out` and diagnostics to
/// `err`. Returns the process exit code: 0 success, 2 parse error, 3
/// precondition violation.
int run_cli(const std::vector<std::string>& args, std::istream& input, std::ostream& out,
            std::ostream& err);

}  // namespace gainspec
