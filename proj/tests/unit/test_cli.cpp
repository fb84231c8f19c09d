#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nqueens/beauty.hpp"
#include "nqueens_cli/archive.hpp"
#include "nqueens_cli/commands.hpp"
#include "nqueens_cli/report.hpp"

using namespace nqueens;
using namespace nqueens::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nqueens");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nqueens_test_" + name)).string();
}

Archive parse(const std::string& text) {
  std::istringstream in(text);
  return parse_archive(in);
}

}  // namespace

TEST(CmdSolve, TenQueens) {
  const CliRun r = invoke({"solve", "--method", "lex-dfs", "--n", "10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "1 3 6 8 10 5 9 2 4 7\n");
}

TEST(CmdSolve, ExitCodes) {
  EXPECT_EQ(invoke({"solve", "--method", "cp", "--n", "3"}).code, kExitInfeasible);
  EXPECT_EQ(invoke({"solve", "--method", "bigint-oracle", "--n", "50"}).code, kExitUsage);
  EXPECT_EQ(invoke({"solve", "--method", "nope", "--n", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"solve", "--method", "cp"}).code, kExitUsage);
  EXPECT_EQ(invoke({"solve", "--method", "cp", "--n", "5", "--arith", "decimal"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  const CliRun t = invoke({"solve", "--method", "lex-dfs", "--arith", "float", "--n", "60",
                     "--time-limit", "0.3"});
  EXPECT_EQ(t.code, kExitTimeout);
}

TEST(CmdSolve, FlagsReachTheSolver) {
  for (const std::vector<std::string> extra :
       {std::vector<std::string>{"--cuts", "on"}, {"--arith", "float"}, {"--node-limit", "5"},
        {"--seed", "3"}}) {
    std::vector<std::string> args{"solve", "--n", "8", "--method"};
    args.push_back(extra[0] == "--node-limit" ? "ilp-trunc" : "lex-dfs");
    args.insert(args.end(), extra.begin(), extra.end());
    const CliRun r = invoke(args);
    EXPECT_EQ(r.code, kExitOk) << extra[0] << r.err;
    EXPECT_EQ(r.out, "1 5 8 6 3 7 2 4\n") << extra[0];
  }
}

TEST(CmdSolve, PrettyBoard) {
  const CliRun r = invoke({"solve", "--method", "cp", "--n", "4", "--pretty"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(". Q . ."), std::string::npos);
  EXPECT_EQ(ascii_board(Permutation({2, 4, 1, 3})), ". Q . .\n. . . Q\nQ . . .\n. . Q .\n");
}

TEST(CmdSolve, BatchWritesOneRecordPerBoard) {
  const std::string path = temp_path("batch.json");
  const CliRun r = invoke({"solve", "--method", "cp", "--batch", "4..7", "--report", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("4: 2 4 1 3"), std::string::npos);
  EXPECT_NE(r.out.find("7: 1 3 5 7 2 4 6"), std::string::npos);
  std::ifstream in(path);
  const nlohmann::json j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    const RunRecord rec = run_record_from_json(j[k]);
    ASSERT_TRUE(rec.solve);
    EXPECT_EQ(rec.solve->n, 4 + k);
  }
  std::filesystem::remove(path);
}

TEST(ParseRange, Examples) {
  EXPECT_EQ(parse_range("4..20"), std::make_pair(4, 20));
  EXPECT_EQ(parse_range("5..5"), std::make_pair(5, 5));
  EXPECT_FALSE(parse_range("7..4"));
  EXPECT_FALSE(parse_range("0..4"));
  EXPECT_FALSE(parse_range("4-9"));
}

TEST(CmdBeauty, Examples) {
  const CliRun six = invoke({"beauty", "--n", "6"});
  EXPECT_EQ(six.code, kExitOk);
  EXPECT_NE(six.out.find("34 34 26 26 10 10"), std::string::npos);

  const CliRun sixteen = invoke({"beauty", "--n", "16"});
  EXPECT_EQ(sixteen.code, kExitOk);
  const Fingerprint want =
      fingerprint(Permutation({9, 11, 4, 14, 10, 2, 5, 1, 16, 12, 15, 7, 3, 13, 6, 8}));
  std::string line;
  for (int64_t v : want) line += (line.empty() ? "" : " ") + std::to_string(v);
  EXPECT_NE(sixteen.out.find(line), std::string::npos);

  const CliRun canon = invoke({"beauty", "--n", "6", "--canonical-witness"});
  EXPECT_EQ(canon.out.substr(0, canon.out.find('\n')), "2 4 6 1 3 5");
  EXPECT_EQ(invoke({"beauty", "--n", "3"}).code, kExitInfeasible);
}

TEST(Archive, ParsesLayoutAndComments) {
  const Archive a = parse(
      "# source: transcribed\n"
      "lex-first 5:\t1 3  5 2 4   # trailing\n"
      "\n"
      "most-beautiful 6: 4 1 5 2 6 3\n"
      "lex-first x: 1 2\n"
      "unknown 4: 2 4 1 3\n");
  ASSERT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.entries[0].kind, ArchiveKind::kLexFirst);
  EXPECT_EQ(a.entries[0].n, 5);
  EXPECT_EQ(a.entries[0].values, (std::vector<int>{1, 3, 5, 2, 4}));
  EXPECT_EQ(a.entries[0].source, "transcribed");
  EXPECT_EQ(a.entries[0].line, 2);
  EXPECT_EQ(a.entries[1].kind, ArchiveKind::kMostBeautiful);
  ASSERT_EQ(a.errors.size(), 2u);
  EXPECT_EQ(a.errors[0].line, 5);
  EXPECT_EQ(a.errors[1].line, 6);
  EXPECT_EQ(parse(format_entry(a.entries[0])).entries[0].values, a.entries[0].values);
}

TEST(Archive, VerifyEntries) {
  const EntryVerdict dup = verify_entry({ArchiveKind::kLexFirst, 4, {1, 3, 3, 2}, "", 1});
  EXPECT_FALSE(dup.ok);
  EXPECT_NE(dup.reason.find("column repeated"), std::string::npos);
  EXPECT_FALSE(verify_entry({ArchiveKind::kLexFirst, 4, {1, 2, 3, 4}, "", 1}).ok);
  EXPECT_FALSE(verify_entry({ArchiveKind::kLexFirst, 5, {2, 4, 1, 3}, "", 1}).ok);

  const EntryVerdict mb = verify_entry({ArchiveKind::kMostBeautiful, 6, {4, 1, 5, 2, 6, 3}, "", 1});
  EXPECT_TRUE(mb.ok);
  ASSERT_TRUE(mb.fingerprint);
  EXPECT_EQ(*mb.fingerprint, (Fingerprint{34, 34, 26, 26, 10, 10}));

  const EntryVerdict lf = verify_entry({ArchiveKind::kLexFirst, 5, {1, 3, 5, 2, 4}, "", 1});
  EXPECT_TRUE(lf.ok);
  EXPECT_EQ(lf.greedy_prefix, 5);
}

TEST(CmdVerify, ShippedArchive) {
  const Archive a = load_archive(NQUEENS_APPENDIX_PATH);
  EXPECT_TRUE(a.errors.empty());
  bool has56 = false, has176 = false;
  for (const ArchiveEntry& e : a.entries) {
    EXPECT_TRUE(verify_entry(e).ok) << format_entry(e);
    has56 = has56 || (e.kind == ArchiveKind::kLexFirst && e.n == 56);
    has176 = has176 || (e.kind == ArchiveKind::kMostBeautiful && e.n == 176);
  }
  EXPECT_TRUE(has56);
  EXPECT_TRUE(has176);
  const CliRun r = invoke({"verify", NQUEENS_APPENDIX_PATH});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("most-beautiful 176  fingerprint:"), std::string::npos);
}

TEST(CmdVerify, CorruptedArchiveFails) {
  const std::string path = temp_path("bad.txt");
  {
    std::ofstream f(path);
    f << "lex-first 4: 2 4 1 3\nlex-first 4: 1 3 3 2\n";
  }
  const CliRun r = invoke({"verify", path});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("column repeated"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"verify", temp_path("missing.txt")}).code, kExitUsage);
}

TEST(Report, RoundTrip) {
  SolveOptions o;
  o.method = Method::kLexCut;
  RunRecord rec;
  rec.version = "1.0.0";
  rec.timestamp = utc_timestamp();
  rec.options.command = "solve";
  rec.options.method = "lex-cut";
  rec.options.n = 7;
  rec.options.time_limit = 2.5;
  rec.options.arith = "rational";
  rec.solve = solve(7, o);
  EXPECT_EQ(parse_run_record(serialize(rec)), rec);

  RunRecord b;
  b.version = "1.0.0";
  b.timestamp = utc_timestamp();
  b.options.command = "beauty";
  b.options.n = 8;
  b.options.canonical_witness = true;
  b.beauty = solve_most_beautiful(8);
  EXPECT_EQ(parse_run_record(serialize(b)), b);

  RunRecord t = rec;
  t.solve->status = SolveStatus::kTimeout;
  t.solve->solution.reset();
  t.solve->partial_prefix = {1, 3, 5};
  EXPECT_EQ(parse_run_record(serialize(t)), t);
}

TEST(Report, SchemaAndErrors) {
  const nlohmann::json j = nlohmann::json::parse(
      serialize(RunRecord{kRunSchema, "1.0.0", "2020-01-01T00:00:00Z", {"solve"}, solve_cp(5), {}}));
  EXPECT_EQ(j.at("schema"), kRunSchema);
  EXPECT_THROW(parse_run_record("{}"), std::runtime_error);
  EXPECT_THROW(parse_run_record("not json"), std::runtime_error);
  EXPECT_EQ(utc_timestamp().size(), 20u);
}

TEST(Report, WrittenBySolve) {
  const std::string path = temp_path("run.json");
  const CliRun r = invoke({"solve", "--method", "ilp-iter", "--n", "9", "--report", path});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const RunRecord rec = parse_run_record(text.str());
  ASSERT_TRUE(rec.solve);
  EXPECT_EQ(rec.solve->solution, Permutation({1, 3, 6, 8, 2, 4, 9, 7, 5}));
  EXPECT_EQ(rec.options.method, "ilp-iter");
  std::filesystem::remove(path);
}
