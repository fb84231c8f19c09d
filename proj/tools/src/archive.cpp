#include "nqueens_cli/archive.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace nqueens::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<int> parse_int(const std::string& tok) {
  int v = 0;
  const char* end = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(ArchiveKind k) {
  return k == ArchiveKind::kLexFirst ? "lex-first" : "most-beautiful";
}

std::optional<ArchiveKind> parse_archive_kind(const std::string& s) {
  if (s == "lex-first") return ArchiveKind::kLexFirst;
  if (s == "most-beautiful") return ArchiveKind::kMostBeautiful;
  return std::nullopt;
}

Archive parse_archive(std::istream& in) {
  Archive out;
  std::string source;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = trim(line.substr(hash + 1));
      if (comment.rfind("source:", 0) == 0) source = trim(comment.substr(7));
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) { out.errors.push_back({line_no, msg}); };
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      fail("missing ':' after '<kind> <n>'");
      continue;
    }
    std::istringstream head(line.substr(0, colon));
    std::string kind_tok, n_tok, extra;
    head >> kind_tok >> n_tok;
    if (n_tok.empty() || (head >> extra)) {
      fail("expected '<kind> <n>' before ':'");
      continue;
    }
    const auto kind = parse_archive_kind(kind_tok);
    if (!kind) {
      fail("unknown kind '" + kind_tok + "'");
      continue;
    }
    const auto n = parse_int(n_tok);
    if (!n || *n < 1) {
      fail("bad board size '" + n_tok + "'");
      continue;
    }
    ArchiveEntry e{*kind, *n, {}, source, line_no};
    std::istringstream body(line.substr(colon + 1));
    std::string tok;
    bool bad = false;
    while (body >> tok) {
      const auto v = parse_int(tok);
      if (!v) {
        fail("not an integer: '" + tok + "'");
        bad = true;
        break;
      }
      e.values.push_back(*v);
    }
    if (!bad) out.entries.push_back(std::move(e));
  }
  return out;
}

Archive load_archive(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open archive '" + path + "'");
  return parse_archive(in);
}

std::string format_entry(const ArchiveEntry& e) {
  std::string s = to_string(e.kind) + " " + std::to_string(e.n) + ":";
  for (int v : e.values) s += " " + std::to_string(v);
  return s;
}

EntryVerdict verify_entry(const ArchiveEntry& e) {
  EntryVerdict v;
  const PlacementCheck check = check_placement(e.values, e.n);
  if (!check.ok) {
    v.reason = check.reason;
    return v;
  }
  v.ok = true;
  const Permutation p(e.values);
  if (e.kind == ArchiveKind::kMostBeautiful) {
    v.fingerprint = fingerprint(p);
  } else {
    const std::vector<int> greedy = greedy_infinite_prefix(e.n);
    while (v.greedy_prefix < e.n && greedy[v.greedy_prefix] == e.values[v.greedy_prefix]) {
      ++v.greedy_prefix;
    }
  }
  return v;
}

}  // namespace nqueens::cli
