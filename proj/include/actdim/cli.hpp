#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actdim::cli {

/// Runs one invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on a domain error, 2 on I/O, parse or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actdim::cli
