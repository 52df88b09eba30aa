#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trifix::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Parses `args` (without the program name) and runs one subcommand:
/// coeffs | localize | feasible | solve-dim8 | parity-search | verify.
/// Output goes to `out`; failures print a JSON error object to `err`.
/// Returns the process exit status (0 on success, 2 on bad input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trifix::cli
