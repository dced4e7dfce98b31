#pragma once

#include <ostream>

namespace rootcontract::cli {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 on success, 2 for invalid input, 3 when an internal cross-check fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootcontract::cli
