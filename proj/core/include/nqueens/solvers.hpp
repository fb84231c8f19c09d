#ifndef NQUEENS_SOLVERS_HPP_
#define NQUEENS_SOLVERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nqueens/bnb.hpp"
#include "nqueens/board.hpp"
#include "nqueens/model.hpp"
#include "nqueens/numeric.hpp"

namespace nqueens {

enum class Method { kCp, kIlpIter, kIlpTrunc, kLexDfs, kLexCut, kBigintOracle };

std::string to_string(Method m);
// Accepts the names printed by to_string ("cp", "ilp-iter", ...).
Method parse_method(const std::string& s);
// Exact arithmetic for the lexicographic methods, floating point for the
// branch-and-bound ones.
Arithmetic default_arithmetic(Method m);

inline constexpr int kBigintMaxN = 12;

struct SolveOptions {
  Method method = Method::kLexDfs;
  // Branch-and-bound nodes per row for ilp-trunc; 0 solves the root only.
  int64_t node_limit = 0;
  std::optional<double> time_limit;
  // Clique and odd-cycle separation at lex-dfs nodes.
  bool cuts_enabled = false;
  std::optional<Arithmetic> arithmetic;
  uint64_t seed = 0;
  // ilp-iter: one ILP per cell instead of one per row.
  bool positionwise = false;
  // cp: matching-based alldifferent filtering instead of forward checking.
  bool matching_filter = false;
  Tolerances tol;
};

enum class SolveStatus { kOptimal, kTimeout, kInfeasible };

std::string to_string(SolveStatus s);

struct SolveReport {
  Method method = Method::kLexDfs;
  int n = 0;
  Arithmetic arithmetic = Arithmetic::kRational;
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Permutation> solution;
  // Rows fixed when the run stopped early. ilp-iter rows are settled; the
  // search methods report the branch they were in, which may still change.
  std::vector<int> partial_prefix;
  int64_t nodes = 0;
  int64_t backtracks = 0;
  CutCounts cuts_added{};
  int64_t lp_pivots = 0;
  double wall_time = 0.0;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

// Observation points for tests and tooling. All optional.
struct SolveHooks {
  // ilp-trunc: a prefix pi_1..pi_k just ruled out; every row-k value up to
  // the last one has been shown to admit no completion.
  std::function<void(const std::vector<int>& prefix)> on_discard;
  // lex-cut: each lex-optimal point, and the cell index where the lex solve
  // stopped at a fractional value (none when integral).
  std::function<void(const std::vector<Rational>& point,
                     std::optional<int> stopped_at)>
      on_lex_point;
};

SolveReport solve(int n, const SolveOptions& options, const SolveHooks& hooks = {});

SolveReport solve_cp(int n, const SolveOptions& options = {});
SolveReport solve_ilp_iter(int n, const SolveOptions& options = {});
SolveReport solve_ilp_trunc(int n, const SolveOptions& options = {},
                            const SolveHooks& hooks = {});
SolveReport solve_lex_dfs(int n, const SolveOptions& options = {});
// LEX-DFS below an arbitrary root: the lex-first placement satisfying every
// fixing, cut and extra row of `root`.
SolveReport solve_lex_dfs_from(const ModelState& root, const SolveOptions& options = {});
SolveReport solve_lex_cut(int n, const SolveOptions& options = {},
                          const SolveHooks& hooks = {});
// Single ILP with coefficients 2^(n(n-i)+j); throws std::invalid_argument
// outside 4 <= n <= kBigintMaxN.
SolveReport solve_bigint_oracle(int n, const SolveOptions& options = {});

// Coefficients of the big-integer objective, row-major.
SparseVector bigint_objective(int n);

}  // namespace nqueens

#endif  // NQUEENS_SOLVERS_HPP_
