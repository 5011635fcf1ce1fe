#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slidewave::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIo = 3,
    kExceedsK = 4,
};

/// Runs one command line (without the program name). "-" as an input
/// operand reads `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace slidewave::cli
