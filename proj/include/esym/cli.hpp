#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esym::cli {

/// Runs the esym command line (args excludes the program name). Returns the
/// process exit code: 0 success or certificate, 2 inconclusive certificate,
/// 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esym::cli
