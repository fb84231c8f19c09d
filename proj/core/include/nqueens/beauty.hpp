#ifndef NQUEENS_BEAUTY_HPP_
#define NQUEENS_BEAUTY_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nqueens/board.hpp"
#include "nqueens/model.hpp"
#include "nqueens/numeric.hpp"
#include "nqueens/solvers.hpp"

namespace nqueens {

// d(i, j) = (2i - n - 1)^2 + (2j - n - 1)^2, four times the squared distance
// of the cell centre from the board centre.
class CellCosts {
 public:
  explicit CellCosts(int n);

  int n() const { return n_; }
  int64_t operator()(int row, int col) const { return d_[(row - 1) * n_ + col - 1]; }
  int64_t at(Cell c) const { return (*this)(c.row, c.col); }
  // Distinct costs, strictly decreasing.
  const std::vector<int64_t>& levels() const { return levels_; }
  // Row-major indices of the cells with cost levels()[k].
  const std::vector<int>& level_cells(int k) const { return level_cells_[k]; }

 private:
  int n_;
  std::vector<int64_t> d_;
  std::vector<int64_t> levels_;
  std::vector<std::vector<int>> level_cells_;
};

inline CellCosts cell_costs(int n) { return CellCosts(n); }

using Fingerprint = std::vector<int64_t>;

// Costs of the occupied cells, non-increasing.
Fingerprint fingerprint(const Permutation& p, const CellCosts& costs);
inline Fingerprint fingerprint(const Permutation& p) {
  return fingerprint(p, CellCosts(p.n()));
}
// Lexicographic order; throws on length mismatch.
std::strong_ordering fingerprint_compare(const Fingerprint& a, const Fingerprint& b);

struct BeautyOptions {
  bool preprocess = true;
  int stride = 100;
  // Stop scanning levels once the pinned counts account for all n queens.
  bool early_exit = true;
  // Replace the witness by the lex-first placement of the final model.
  bool canonical_witness = false;
  std::optional<double> time_limit;
  uint64_t seed = 0;
  Arithmetic arithmetic = Arithmetic::kFloat;
  Tolerances tol;
};

struct LevelOutcome {
  int64_t cost = 0;
  int count = 0;

  friend bool operator==(const LevelOutcome&, const LevelOutcome&) = default;
};

struct BeautyReport {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Permutation> solution;
  Fingerprint fingerprint;
  // Levels solved one by one (skipped and trailing levels excluded).
  std::vector<LevelOutcome> levels;
  int num_levels = 0;
  int levels_skipped = 0;  // fixed to zero by successful probes
  int probes = 0;
  int64_t nodes = 0;
  int64_t lp_pivots = 0;
  double wall_time = 0.0;

  friend bool operator==(const BeautyReport&, const BeautyReport&) = default;
};

struct SkipResult {
  int next_k = 0;
  bool success = false;
  int64_t nodes = 0;
};

// Probe for a placement avoiding every cell with cost >= levels[k + stride]
// (clamped to the last level). On success those cells are fixed to 0 in
// `state` and k advances by stride; otherwise nothing changes.
SkipResult preprocess_skip(ModelState& state, const CellCosts& costs, int k,
                           int stride, const BeautyOptions& options = {},
                           const Deadline* deadline = nullptr);

BeautyReport solve_most_beautiful(int n, const BeautyOptions& options = {});

}  // namespace nqueens

#endif  // NQUEENS_BEAUTY_HPP_
