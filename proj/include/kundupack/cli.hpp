#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kundu::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a clean failure, 2 on bad input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kundu::cli
