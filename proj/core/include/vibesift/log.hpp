#pragma once

#include <string_view>

namespace vibesift {

/// Suppress warning output (used by the CLI --quiet flag).
void set_quiet(bool quiet);
bool quiet();

/// Write a one-line warning to stderr unless quiet mode is on.
void log_warning(std::string_view message);

}  // namespace vibesift
