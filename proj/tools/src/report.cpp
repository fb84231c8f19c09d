#include "nqueens_cli/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace nqueens::cli {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

SolveStatus parse_status(const std::string& s) {
  for (SolveStatus v : {SolveStatus::kOptimal, SolveStatus::kTimeout, SolveStatus::kInfeasible}) {
    if (to_string(v) == s) return v;
  }
  throw std::runtime_error("unknown status '" + s + "'");
}

json solution_json(const std::optional<Permutation>& p) {
  return p ? json(p->values()) : json(nullptr);
}

std::optional<Permutation> solution_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Permutation(j.get<std::vector<int>>());
}

json options_json(const RunOptions& o) {
  return {{"command", o.command},     {"method", opt(o.method)},
          {"n", o.n},                 {"time_limit", opt(o.time_limit)},
          {"node_limit", o.node_limit}, {"cuts", o.cuts},
          {"arith", opt(o.arith)},    {"seed", o.seed},
          {"canonical_witness", o.canonical_witness}};
}

RunOptions options_from(const json& j) {
  RunOptions o;
  o.command = j.at("command").get<std::string>();
  o.method = get_opt<std::string>(j, "method");
  o.n = j.at("n").get<int>();
  o.time_limit = get_opt<double>(j, "time_limit");
  o.node_limit = j.value("node_limit", int64_t{0});
  o.cuts = j.value("cuts", false);
  o.arith = get_opt<std::string>(j, "arith");
  o.seed = j.value("seed", uint64_t{0});
  o.canonical_witness = j.value("canonical_witness", false);
  return o;
}

json solve_json(const SolveReport& r) {
  json cuts = json::object();
  for (int k = 0; k < kNumCutKinds; ++k) {
    cuts[to_string(static_cast<CutKind>(k))] = r.cuts_added[k];
  }
  return {{"method", to_string(r.method)},
          {"n", r.n},
          {"arithmetic", to_string(r.arithmetic)},
          {"status", to_string(r.status)},
          {"solution", solution_json(r.solution)},
          {"partial_prefix", r.partial_prefix},
          {"nodes", r.nodes},
          {"backtracks", r.backtracks},
          {"cuts_added", cuts},
          {"lp_pivots", r.lp_pivots},
          {"wall_time", r.wall_time}};
}

SolveReport solve_from(const json& j) {
  SolveReport r;
  r.method = parse_method(j.at("method").get<std::string>());
  r.n = j.at("n").get<int>();
  r.arithmetic = parse_arithmetic(j.at("arithmetic").get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  r.solution = solution_from(j.at("solution"));
  r.partial_prefix = j.value("partial_prefix", std::vector<int>{});
  r.nodes = j.value("nodes", int64_t{0});
  r.backtracks = j.value("backtracks", int64_t{0});
  if (j.contains("cuts_added")) {
    const json& cuts = j.at("cuts_added");
    for (int k = 0; k < kNumCutKinds; ++k) {
      r.cuts_added[k] = cuts.value(to_string(static_cast<CutKind>(k)), int64_t{0});
    }
  }
  r.lp_pivots = j.value("lp_pivots", int64_t{0});
  r.wall_time = j.value("wall_time", 0.0);
  return r;
}

json beauty_json(const BeautyReport& r) {
  json levels = json::array();
  for (const LevelOutcome& l : r.levels) levels.push_back({{"cost", l.cost}, {"count", l.count}});
  return {{"status", to_string(r.status)},
          {"solution", solution_json(r.solution)},
          {"fingerprint", r.fingerprint},
          {"levels", levels},
          {"num_levels", r.num_levels},
          {"levels_skipped", r.levels_skipped},
          {"probes", r.probes},
          {"nodes", r.nodes},
          {"lp_pivots", r.lp_pivots},
          {"wall_time", r.wall_time}};
}

BeautyReport beauty_from(const json& j) {
  BeautyReport r;
  r.status = parse_status(j.at("status").get<std::string>());
  r.solution = solution_from(j.at("solution"));
  r.fingerprint = j.value("fingerprint", Fingerprint{});
  for (const json& l : j.value("levels", json::array())) {
    r.levels.push_back({l.at("cost").get<int64_t>(), l.at("count").get<int>()});
  }
  r.num_levels = j.value("num_levels", 0);
  r.levels_skipped = j.value("levels_skipped", 0);
  r.probes = j.value("probes", 0);
  r.nodes = j.value("nodes", int64_t{0});
  r.lp_pivots = j.value("lp_pivots", int64_t{0});
  r.wall_time = j.value("wall_time", 0.0);
  return r;
}

}  // namespace

json to_json(const RunRecord& r) {
  json j = {{"schema", r.schema},
            {"version", r.version},
            {"timestamp", r.timestamp},
            {"options", options_json(r.options)}};
  if (r.solve) j["solve"] = solve_json(*r.solve);
  if (r.beauty) j["beauty"] = beauty_json(*r.beauty);
  return j;
}

RunRecord run_record_from_json(const json& j) {
  try {
    RunRecord r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kRunSchema) throw std::runtime_error("unsupported schema '" + r.schema + "'");
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.options = options_from(j.at("options"));
    if (j.contains("solve")) r.solve = solve_from(j.at("solve"));
    if (j.contains("beauty")) r.beauty = beauty_from(j.at("beauty"));
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed run record: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed run record: ") + e.what());
  }
}

std::string serialize(const RunRecord& r) { return to_json(r).dump(2) + "\n"; }

RunRecord parse_run_record(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed run record: ") + e.what());
  }
  return run_record_from_json(j);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace nqueens::cli
