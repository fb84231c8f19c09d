#ifndef NQUEENS_CLI_ARCHIVE_HPP_
#define NQUEENS_CLI_ARCHIVE_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nqueens/beauty.hpp"

namespace nqueens::cli {

enum class ArchiveKind { kLexFirst, kMostBeautiful };

std::string to_string(ArchiveKind k);
std::optional<ArchiveKind> parse_archive_kind(const std::string& s);

// One placement as written in an archive. `values` is whatever the line
// held; well-formedness is checked by verify_archive, not by the parser.
struct ArchiveEntry {
  ArchiveKind kind = ArchiveKind::kLexFirst;
  int n = 0;
  std::vector<int> values;
  // Set by the most recent "# source: ..." comment, if any.
  std::string source;
  int line = 0;
};

struct ArchiveParseError {
  int line = 0;
  std::string message;
};

struct Archive {
  std::vector<ArchiveEntry> entries;
  std::vector<ArchiveParseError> errors;
};

// Format: one entry per line, "<kind> <n>: v1 v2 ... vn", blanks and tabs in
// any amount between tokens, '#' starts a comment.
Archive parse_archive(std::istream& in);
// Throws std::runtime_error when the file cannot be opened.
Archive load_archive(const std::string& path);

std::string format_entry(const ArchiveEntry& e);

struct EntryVerdict {
  bool ok = false;
  std::string reason;
  // Most-beautiful entries that are feasible.
  std::optional<Fingerprint> fingerprint;
  // Lex-first entries: how many leading terms agree with the infinite-board
  // greedy sequence. Informational only.
  int greedy_prefix = 0;
};

EntryVerdict verify_entry(const ArchiveEntry& e);

}  // namespace nqueens::cli

#endif  // NQUEENS_CLI_ARCHIVE_HPP_
