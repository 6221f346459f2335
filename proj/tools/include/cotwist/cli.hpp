#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotwist::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;  // a counterexample was found
inline constexpr int kExitInputError = 2;

/// Runs one job. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotwist::cli
