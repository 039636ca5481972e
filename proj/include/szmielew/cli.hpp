#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szmielew {

/// Runs one command (args excludes the program name). Writes a single JSON
/// object to `out` on success or to `err` on failure. Returns 0 on success,
/// 1 on malformed input, 2 on an internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szmielew
