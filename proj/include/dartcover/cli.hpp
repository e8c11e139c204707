#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dartcover {

/// Exit codes of the command-line tool.
namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int usage = 2;
inline constexpr int np_complete = 3;
inline constexpr int resource = 4;
}  // namespace exit_code

/// Runs the tool on `args` (without the program name). JSON and graph text
/// go to `out`, summaries and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dartcover
