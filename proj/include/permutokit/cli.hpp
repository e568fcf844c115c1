#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permutokit::cli {

/// Runs the command line (without the program name). Reads JSON input from
/// `in` unless --input names a file. Exit codes: 0 success, 1 law violation,
/// 2 usage or validation error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace permutokit::cli
