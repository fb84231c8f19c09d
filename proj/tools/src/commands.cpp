#include "nqueens_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nqueens/version.hpp"
#include "nqueens_cli/archive.hpp"

namespace nqueens::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return kExitOk;
    case SolveStatus::kTimeout:
      return kExitTimeout;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
  }
  return kExitUsage;
}

std::string join(const std::vector<int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  return join(std::vector<int64_t>(v.begin(), v.end()));
}

SolveOptions solve_options(const CliArgs& args) {
  SolveOptions o;
  if (!args.run.method) throw UsageError("--method is required");
  try {
    o.method = parse_method(*args.run.method);
    if (args.run.arith) o.arithmetic = parse_arithmetic(*args.run.arith);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.run.node_limit < 0) throw UsageError("--node-limit must be >= 0");
  o.node_limit = args.run.node_limit;
  o.time_limit = args.run.time_limit;
  o.cuts_enabled = args.run.cuts;
  o.seed = args.run.seed;
  o.positionwise = args.positionwise;
  o.matching_filter = args.matching_filter;
  return o;
}

BeautyOptions beauty_options(const CliArgs& args) {
  BeautyOptions o;
  try {
    if (args.run.arith) o.arithmetic = parse_arithmetic(*args.run.arith);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.stride < 1) throw UsageError("--stride must be >= 1");
  o.time_limit = args.run.time_limit;
  o.seed = args.run.seed;
  o.canonical_witness = args.run.canonical_witness;
  o.stride = args.stride;
  o.preprocess = args.preprocess;
  return o;
}

void check_common(const CliArgs& args) {
  if (args.run.time_limit && !(*args.run.time_limit > 0)) {
    throw UsageError("--time-limit must be positive");
  }
  if (!args.batch && args.run.n < 1) throw UsageError("--n must be a positive integer");
}

std::vector<int> sizes(const CliArgs& args) {
  if (!args.batch) return {args.run.n};
  std::vector<int> out;
  for (int n = args.batch->first; n <= args.batch->second; ++n) out.push_back(n);
  return out;
}

// Runs job(i) for every i in [0, count) on up to hardware_concurrency threads.
template <class Job>
void fan_out(std::size_t count, Job job) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

RunRecord new_record(const CliArgs& args, int n) {
  RunRecord r;
  r.version = kVersion;
  r.timestamp = utc_timestamp();
  r.options = args.run;
  r.options.n = n;
  return r;
}

void write_reports(const CliArgs& args, const std::vector<RunRecord>& records) {
  if (!args.report_path) return;
  std::ofstream f(*args.report_path);
  if (!f) throw std::runtime_error("cannot write report '" + *args.report_path + "'");
  if (args.batch) {
    nlohmann::json all = nlohmann::json::array();
    for (const RunRecord& r : records) all.push_back(to_json(r));
    f << all.dump(2) << "\n";
  } else {
    f << serialize(records.front());
  }
}

void describe_failure(std::ostream& err, int n, SolveStatus s, const std::vector<int>& prefix) {
  if (s == SolveStatus::kInfeasible) {
    err << "n=" << n << ": no placement exists\n";
  } else if (s == SolveStatus::kTimeout) {
    err << "n=" << n << ": time limit reached";
    if (!prefix.empty()) err << "; settled prefix: " << join(prefix);
    err << "\n";
  }
}

template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return std::nullopt;
  auto num = [](std::string_view t) -> std::optional<int> {
    int v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
    return v;
  };
  const std::string_view sv(s);
  const auto a = num(sv.substr(0, dots));
  const auto b = num(sv.substr(dots + 2));
  if (!a || !b || *a < 1 || *b < *a) return std::nullopt;
  return std::pair{*a, *b};
}

std::string ascii_board(const Permutation& p) {
  std::string s;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n(); ++j) {
      if (j > 1) s += ' ';
      s += p[i] == j ? 'Q' : '.';
    }
    s += '\n';
  }
  return s;
}

int cmd_solve(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(args);
    const SolveOptions options = solve_options(args);
    const std::vector<int> ns = sizes(args);
    if (options.method == Method::kBigintOracle) {
      for (int n : ns) {
        if (n < 4 || n > kBigintMaxN) {
          throw UsageError("bigint-oracle supports 4 <= n <= " + std::to_string(kBigintMaxN));
        }
      }
    }
    std::vector<RunRecord> records(ns.size());
    fan_out(ns.size(), [&](std::size_t i) {
      records[i] = new_record(args, ns[i]);
      records[i].solve = solve(ns[i], options);
    });
    int code = kExitOk;
    for (const RunRecord& r : records) {
      const SolveReport& rep = *r.solve;
      if (args.batch) out << rep.n << ": ";
      if (rep.solution) {
        out << rep.solution->to_string() << "\n";
        if (args.pretty) out << ascii_board(*rep.solution);
      } else {
        if (args.batch) out << to_string(rep.status) << "\n";
        describe_failure(err, rep.n, rep.status, rep.partial_prefix);
      }
      if (code == kExitOk) code = exit_code(rep.status);
    }
    write_reports(args, records);
    return code;
  });
}

int cmd_beauty(const CliArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_common(args);
    const BeautyOptions options = beauty_options(args);
    const std::vector<int> ns = sizes(args);
    std::vector<RunRecord> records(ns.size());
    fan_out(ns.size(), [&](std::size_t i) {
      records[i] = new_record(args, ns[i]);
      records[i].beauty = solve_most_beautiful(ns[i], options);
    });
    int code = kExitOk;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const BeautyReport& rep = *records[i].beauty;
      const std::string tag = args.batch ? std::to_string(ns[i]) + ": " : "";
      if (rep.solution) {
        out << tag << rep.solution->to_string() << "\n";
        out << tag << join(rep.fingerprint) << "\n";
        if (args.pretty) out << ascii_board(*rep.solution);
      } else {
        if (args.batch) out << tag << to_string(rep.status) << "\n";
        describe_failure(err, ns[i], rep.status, {});
      }
      if (code == kExitOk) code = exit_code(rep.status);
    }
    write_reports(args, records);
    return code;
  });
}

int cmd_verify(const std::string& archive_path, std::ostream& out, std::ostream& err) {
  Archive archive;
  try {
    archive = load_archive(archive_path);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const ArchiveParseError& e : archive.errors) {
    err << archive_path << ":" << e.line << ": " << e.message << "\n";
  }
  int failed = 0;
  for (const ArchiveEntry& e : archive.entries) {
    const EntryVerdict v = verify_entry(e);
    const std::string what = to_string(e.kind) + " " + std::to_string(e.n);
    if (!v.ok) {
      ++failed;
      out << "FAIL " << what << " (line " << e.line << "): " << v.reason << "\n";
      continue;
    }
    out << "ok   " << what;
    if (v.fingerprint) out << "  fingerprint: " << join(*v.fingerprint);
    if (e.kind == ArchiveKind::kLexFirst) out << "  greedy prefix: " << v.greedy_prefix;
    out << "\n";
  }
  out << archive.entries.size() - failed << "/" << archive.entries.size() << " entries feasible";
  if (!archive.errors.empty()) out << ", " << archive.errors.size() << " unreadable lines";
  out << "\n";
  return failed == 0 && archive.errors.empty() ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact n-queens solvers: lexicographically first and most beautiful placements",
               "nqueens"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CliArgs args;
  std::string batch;
  std::string cuts = "off";
  std::string archive_path;

  auto add_common = [&](CLI::App* sub) {
    auto* n = sub->add_option("--n", args.run.n, "Board size");
    auto* b = sub->add_option("--batch", batch, "Range of board sizes, e.g. 4..20");
    n->excludes(b);
    sub->add_option("--time-limit", args.run.time_limit, "Wall-clock budget in seconds");
    sub->add_option("--arith", args.run.arith, "LP arithmetic")
        ->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--report", args.report_path, "Write a JSON run report to this path");
    sub->add_option("--seed", args.run.seed, "Tie-breaking seed for branch and bound");
    sub->add_flag("--pretty", args.pretty, "Also print the board");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Find the lexicographically first placement");
  add_common(solve_cmd);
  solve_cmd->add_option("--method", args.run.method, "cp, ilp-iter, ilp-trunc, lex-dfs, lex-cut, bigint-oracle")
      ->required();
  solve_cmd->add_option("--node-limit", args.run.node_limit, "ilp-trunc nodes per row (0: root only)");
  solve_cmd->add_option("--cuts", cuts, "Clique and odd-cycle cuts in lex-dfs")
      ->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_flag("--positionwise", args.positionwise, "ilp-iter: one ILP per cell");
  solve_cmd->add_flag("--matching", args.matching_filter, "cp: matching-based alldifferent filtering");

  CLI::App* beauty_cmd = app.add_subcommand("beauty", "Find a most beautiful placement");
  add_common(beauty_cmd);
  beauty_cmd->add_flag("--canonical-witness", args.run.canonical_witness,
                       "Report the lex-first placement among the optimal ones");
  beauty_cmd->add_option("--stride", args.stride, "Cost levels skipped per probe");
  bool no_preprocess = false;
  beauty_cmd->add_flag("--no-preprocess", no_preprocess, "Disable the level-skipping probes");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check every placement of an archive file");
  verify_cmd->add_option("archive", archive_path, "Archive file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*verify_cmd) return cmd_verify(archive_path, out, err);

  CLI::App* sub = *solve_cmd ? solve_cmd : beauty_cmd;
  if (sub->count("--n") == 0 && sub->count("--batch") == 0) {
    err << "error: one of --n or --batch is required\n";
    return kExitUsage;
  }
  if (!batch.empty()) {
    args.batch = parse_range(batch);
    if (!args.batch) {
      err << "error: --batch expects a range like 4..20\n";
      return kExitUsage;
    }
  }
  args.run.cuts = cuts == "on";
  args.preprocess = !no_preprocess;
  if (sub == solve_cmd) {
    args.run.command = "solve";
    return cmd_solve(args, out, err);
  }
  args.run.command = "beauty";
  return cmd_beauty(args, out, err);
}

}  // namespace nqueens::cli
