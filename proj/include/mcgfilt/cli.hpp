#pragma once

#include <string>
#include <vector>

namespace mcg {

// Runs one CLI command; args are argv[1..] of the `mcgfilt` tool. Everything
// the command prints is appended to out. Returns the process exit code:
//   0   success
//   1   selftest reported failures
//   2   precondition violation (the membership witness is printed)
//   64  unknown subcommand, or missing/unknown/ill-typed flags
//   65  malformed word, tree, or JSON input
int cli_run(const std::vector<std::string>& args, std::string& out);

}  // namespace mcg
