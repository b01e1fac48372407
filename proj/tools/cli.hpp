#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mgc::tools {

/// Entry point of the command-line tool, separated from main() so tests can
/// drive it and capture the exact bytes it writes. Returns the process exit
/// code: 0 when a verdict was produced (including Fails), 2 on input
/// errors, 3 on numerical failures. Error paths print a single-line JSON
/// object {"error":code,"detail":text} on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mgc::tools
