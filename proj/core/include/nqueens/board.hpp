#ifndef NQUEENS_BOARD_HPP_
#define NQUEENS_BOARD_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nqueens {

// A square of an n x n board. Rows and columns are 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  // Difference diagonal key, in [1 - n, n - 1].
  int diff_diagonal() const { return row - col; }
  // Sum (anti-)diagonal key, in [2, 2n].
  int sum_diagonal() const { return row + col; }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Row-major variable index of a cell, 0-based.
inline int cell_index(int n, Cell c) { return (c.row - 1) * n + (c.col - 1); }
inline Cell index_cell(int n, int index) {
  return Cell{index / n + 1, index % n + 1};
}

// True iff the two (distinct) cells share a row, a column or a diagonal.
bool attacks(Cell a, Cell b);

// A complete queen arrangement: values()[i - 1] is the column of the queen in
// row i. Construction guarantees a permutation of 1..n; diagonal conflicts are
// allowed and checked by is_feasible().
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);

  int n() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  // Column of the queen in 1-based row `row`.
  int operator[](int row) const { return values_[row - 1]; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Result of checking a candidate sequence; `reason` is empty on success.
struct PlacementCheck {
  bool ok = true;
  std::string reason;
};

// Diagnoses an arbitrary column sequence: length, range, repeated columns
// ("column repeated") and shared diagonals.
PlacementCheck check_placement(std::span<const int> values, int n);

// True iff no two queens share a diagonal: pi_i + i and pi_i - i all distinct.
bool is_feasible(const Permutation& p);

// Standard lexicographic order on the column sequences; requires equal n.
std::strong_ordering lex_compare(const Permutation& a, const Permutation& b);

// The first rows of a partial arrangement, pairwise non-attacking.
class PartialPlacement {
 public:
  explicit PartialPlacement(int n) : n_(n) {}
  PartialPlacement(int n, std::vector<int> prefix);

  int n() const { return n_; }
  int fixed_rows() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }

  // True iff a queen in the next row at `col` attacks no fixed queen.
  bool can_extend(int col) const;
  void extend(int col);

 private:
  int n_;
  std::vector<int> values_;
};

// First `len` terms of the infinite-board greedy sequence: anti-diagonals
// row + col = 2, 3, ... are scanned in increasing row order and each receives
// a queen at its first square not attacked by an earlier queen. Term i is the
// column of the queen in row i.
std::vector<int> greedy_infinite_prefix(int len);

}  // namespace nqueens

#endif  // NQUEENS_BOARD_HPP_
