#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbilliard::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Ladder deviation above which `ladder` exits with kExitVerificationFailed.
inline constexpr double kLadderTolerance = 1e-9;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Value with 9 significant digits in plain decimal notation (no exponent).
std::string format_sig9(double value);

}  // namespace qbilliard::cli
