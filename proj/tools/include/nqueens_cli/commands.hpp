#ifndef NQUEENS_CLI_COMMANDS_HPP_
#define NQUEENS_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "nqueens_cli/report.hpp"

namespace nqueens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;
inline constexpr int kExitInfeasible = 4;

struct CliArgs {
  RunOptions run;
  std::optional<std::string> report_path;
  // Inclusive range of board sizes, solved on worker threads.
  std::optional<std::pair<int, int>> batch;
  bool pretty = false;
  // solve only
  bool positionwise = false;
  bool matching_filter = false;
  // beauty only
  int stride = 100;
  bool preprocess = true;
};

// "a..b" with 1 <= a <= b.
std::optional<std::pair<int, int>> parse_range(const std::string& s);

// Each returns the process exit code. Results go to `out`, diagnostics to
// `err`.
int cmd_solve(const CliArgs& args, std::ostream& out, std::ostream& err);
int cmd_beauty(const CliArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& archive_path, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// One line per row, 'Q' for a queen and '.' elsewhere.
std::string ascii_board(const Permutation& p);

}  // namespace nqueens::cli

#endif  // NQUEENS_CLI_COMMANDS_HPP_
