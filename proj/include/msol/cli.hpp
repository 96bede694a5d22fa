#pragma once

#include <string>
#include <vector>

namespace msol {

// Exit codes: 0 success, 2 configuration error, 10 stop-on-first-bug fired,
// 11 metrics fetch degraded to partial results.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitBugFound = 10;
inline constexpr int kExitPartialMetrics = 11;

int cli_main(int argc, char** argv);
int cli_main(const std::vector<std::string>& args);  // args[0] = program name

}  // namespace msol
