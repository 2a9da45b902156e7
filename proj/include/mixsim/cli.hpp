#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixsim::cli {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success, 1 usage/validation error, 2 runtime/IO
// error. All regular output goes to `out`, diagnostics to `err`; main()
// passes std::cout/std::cerr. Tests drive this directly.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mixsim::cli
