#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hunters::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
inline constexpr int escaped = 4;
}  // namespace exit_code

/// Runs one invocation; args exclude the program name. The report goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hunters::cli
