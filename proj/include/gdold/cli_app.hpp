#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdold {

/// Runs the command-line interface against explicit streams.
///
/// @param args command-line arguments, excluding the program name
/// @param out  stream for regular output
/// @param err  stream for diagnostics
/// @return process exit code: 0 on success, 2 on invalid input,
///         3 when the requested computation falls outside the supported cases
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err);

}  // namespace gdold
