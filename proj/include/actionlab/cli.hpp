#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actionlab {

inline constexpr const char* kVersion = "0.4.0";

/// Exit codes of run().
enum ExitCode : int { kOk = 0, kInvalid = 1, kCounterexample = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace actionlab
