#pragma once

// Batch command-line front end.  run() parses argv, executes the requested
// task, writes the report(s) to standard output, and returns the process
// exit code: 0 = every check passed, 1 = at least one verification failed,
// 2 = usage or parameter error.

#include <string_view>
#include <utility>

namespace eigenkit::cli {

// "7" -> (7, 7); "2..60" -> (2, 60).  Throws std::invalid_argument for
// malformed text or an empty range.
std::pair<unsigned, unsigned> parse_range(std::string_view text);

int run(int argc, const char* const* argv);

}  // namespace eigenkit::cli
