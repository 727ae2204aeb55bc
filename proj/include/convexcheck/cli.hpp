#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "convexcheck/scalar.hpp"

namespace convexcheck::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kUnexpectedOutcome = 3 };

/// Comma separated rationals, or a range "first:last:step" (inclusive).
std::vector<Rational> parse_rational_list(std::string_view text);

/// Runs one convexcheck invocation. The report goes to `out` (or to the
/// --json path), diagnostics to `err`; the return value is the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convexcheck::cli
