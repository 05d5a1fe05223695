#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace cartanlab {

// Exit codes shared by every subcommand.
enum Exit : int { kPass = 0, kInput = 1, kPrecondition = 2, kPropertyFailure = 3 };

// Runs the command line; the JSON report goes to `out` (or --output), messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartanlab
