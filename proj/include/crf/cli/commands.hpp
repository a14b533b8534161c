#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crf::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv, runs one verb and writes the report to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sorted identifiers occurring in the expressions, skipping `exclude`.
std::vector<std::string> infer_variables(const std::vector<std::string>& expressions,
                                         const std::vector<std::string>& exclude = {});

} // namespace crf::cli
