#include "nqueens/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace nqueens {

bool attacks(Cell a, Cell b) {
  return a.row == b.row || a.col == b.col ||
         std::abs(a.row - b.row) == std::abs(a.col - b.col);
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("column repeated: " + std::to_string(v));
    }
    seen[v] = true;
  }
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ' ';
    out << values_[i];
  }
  return out.str();
}

PlacementCheck check_placement(std::span<const int> values, int n) {
  if (static_cast<int>(values.size()) != n) {
    return {false, "expected " + std::to_string(n) + " values, got " +
                       std::to_string(values.size())};
  }
  std::vector<int> col_row(n + 1, 0);
  std::vector<int> sum_row(2 * n + 1, 0);
  std::vector<int> diff_row(2 * n, 0);
  for (int i = 1; i <= n; ++i) {
    const int c = values[i - 1];
    if (c < 1 || c > n) {
      return {false, "row " + std::to_string(i) + ": column " +
                         std::to_string(c) + " out of range"};
    }
    if (col_row[c] != 0) {
      return {false, "column repeated: " + std::to_string(c) + " in rows " +
                         std::to_string(col_row[c]) + " and " +
                         std::to_string(i)};
    }
    col_row[c] = i;
    const int s = i + c;
    const int d = i - c + n;
    if (sum_row[s] != 0 || diff_row[d] != 0) {
      const int other = sum_row[s] != 0 ? sum_row[s] : diff_row[d];
      return {false, "diagonal shared by rows " + std::to_string(other) +
                         " and " + std::to_string(i)};
    }
    sum_row[s] = i;
    diff_row[d] = i;
  }
  return {};
}

bool is_feasible(const Permutation& p) {
  const int n = p.n();
  std::vector<bool> sum_used(2 * n + 1, false);
  std::vector<bool> diff_used(2 * n, false);
  for (int i = 1; i <= n; ++i) {
    const int s = p[i] + i;
    const int d = p[i] - i + n;
    if (sum_used[s] || diff_used[d]) return false;
    sum_used[s] = diff_used[d] = true;
  }
  return true;
}

std::strong_ordering lex_compare(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("lex_compare: board sizes differ");
  }
  return std::lexicographical_compare_three_way(
      a.values().begin(), a.values().end(), b.values().begin(),
      b.values().end());
}

PartialPlacement::PartialPlacement(int n, std::vector<int> prefix) : n_(n) {
  for (int c : prefix) {
    if (!can_extend(c)) {
      throw std::invalid_argument("prefix is not conflict-free");
    }
    extend(c);
  }
}

bool PartialPlacement::can_extend(int col) const {
  if (col < 1 || col > n_ || fixed_rows() >= n_) return false;
  const Cell next{fixed_rows() + 1, col};
  for (int i = 0; i < fixed_rows(); ++i) {
    if (attacks(Cell{i + 1, values_[i]}, next)) return false;
  }
  return true;
}

void PartialPlacement::extend(int col) {
  if (!can_extend(col)) {
    throw std::invalid_argument("cannot place a queen in column " +
                                std::to_string(col));
  }
  values_.push_back(col);
}

std::vector<int> greedy_infinite_prefix(int len) {
  if (len < 1) throw std::invalid_argument("greedy prefix length must be >= 1");
  std::unordered_set<int> used_rows;
  std::unordered_set<int> used_cols;
  std::unordered_set<int> used_diffs;
  std::vector<int> col_of_row;  // 0 = not yet placed
  int filled_prefix = 0;
  for (int diagonal = 2; filled_prefix < len; ++diagonal) {
    for (int row = 1; row < diagonal; ++row) {
      const int col = diagonal - row;
      if (used_rows.contains(row) || used_cols.contains(col) ||
          used_diffs.contains(row - col)) {
        continue;
      }
      used_rows.insert(row);
      used_cols.insert(col);
      used_diffs.insert(row - col);
      if (static_cast<int>(col_of_row.size()) < row) col_of_row.resize(row, 0);
      col_of_row[row - 1] = col;
      break;
    }
    while (filled_prefix < static_cast<int>(col_of_row.size()) &&
           col_of_row[filled_prefix] != 0) {
      ++filled_prefix;
    }
  }
  col_of_row.resize(len);
  return col_of_row;
}

}  // namespace nqueens
