#pragma once

#include <iosfwd>

namespace chipnoise::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 2, kDomain = 3, kIo = 4 };

/// Parses and runs one command line. Tables go to `out` (or --out), messages
/// and warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chipnoise::cli
