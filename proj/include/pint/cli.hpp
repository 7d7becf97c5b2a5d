#pragma once

namespace pint {

// Entry point for the command-line tool. Returns the process exit code:
// 0 success / all-match, 1 verification failure or table mismatch,
// 2 usage or parse errors.
int run_cli(int argc, const char* const* argv);

}  // namespace pint
