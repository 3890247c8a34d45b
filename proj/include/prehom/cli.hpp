#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prehom::cli {

/// Exit codes: 0 computed (the verdict itself is in the JSON), 1 invalid
/// input, 2 usage error.
inline constexpr int kComputed = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kUsage = 2;

/// Runs one command. `args` excludes the program name. Every command writes a
/// single JSON document to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prehom::cli
