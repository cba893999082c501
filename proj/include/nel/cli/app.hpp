#pragma once

#include <ostream>

namespace nel::cli {

/// Exit codes of the `nel` tool.
enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitComputation = 3, kExitIo = 4 };

/// Full command-line entry point. `out` receives help and version text, `err` error messages.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nel::cli
