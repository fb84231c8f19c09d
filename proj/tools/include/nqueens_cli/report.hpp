#ifndef NQUEENS_CLI_REPORT_HPP_
#define NQUEENS_CLI_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nqueens/beauty.hpp"
#include "nqueens/solvers.hpp"

namespace nqueens::cli {

inline constexpr const char* kRunSchema = "nqueens-run/1";

// The command line as understood, before defaults are applied.
struct RunOptions {
  std::string command;  // "solve" or "beauty"
  std::optional<std::string> method;
  int n = 0;
  std::optional<double> time_limit;
  int64_t node_limit = 0;
  bool cuts = false;
  std::optional<std::string> arith;
  uint64_t seed = 0;
  bool canonical_witness = false;

  friend bool operator==(const RunOptions&, const RunOptions&) = default;
};

// One run. Exactly one of `solve` / `beauty` is set.
struct RunRecord {
  std::string schema = kRunSchema;
  std::string version;
  std::string timestamp;
  RunOptions options;
  std::optional<SolveReport> solve;
  std::optional<BeautyReport> beauty;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

nlohmann::json to_json(const RunRecord& r);
// Throws std::runtime_error on a malformed document. Unknown keys are
// ignored so newer writers stay readable.
RunRecord run_record_from_json(const nlohmann::json& j);

std::string serialize(const RunRecord& r);
RunRecord parse_run_record(const std::string& text);

// ISO 8601, UTC, second resolution.
std::string utc_timestamp();

}  // namespace nqueens::cli

#endif  // NQUEENS_CLI_REPORT_HPP_
