// Test-only reference implementations. Nothing here calls into the solver
// library except to convert results into its types.
#ifndef NQUEENS_TESTS_ORACLES_HPP_
#define NQUEENS_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nqueens/lp.hpp"
#include "nqueens/numeric.hpp"

namespace oracle {

// Two queens at (r1, c1) and (r2, c2) attack each other.
inline bool conflict(int r1, int c1, int r2, int c2) {
  if (r1 == r2 && c1 == c2) return false;
  return r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2;
}

// Pairwise check of a full column sequence.
bool pairwise_ok(const std::vector<int>& cols);

// Every feasible placement of the n x n board in lexicographic order.
std::vector<std::vector<int>> all_solutions(int n);

// Feasible completions of a prefix (rows 1..k fixed), in lex order; stops
// after `limit` of them.
std::vector<std::vector<int>> completions(int n, const std::vector<int>& prefix,
                                          std::size_t limit = SIZE_MAX);

// Plain execution of the anti-diagonal greedy rule on an unbounded board:
// diagonals row + col = 2, 3, ... in increasing row order, first free square
// gets a queen. Returns the columns of rows 1..len.
std::vector<int> greedy_sequence(int len);

// (2i - n - 1)^2 + (2j - n - 1)^2.
inline int64_t cost(int n, int i, int j) {
  const int64_t a = 2 * i - n - 1, b = 2 * j - n - 1;
  return a * a + b * b;
}

// Occupied costs sorted non-increasing.
std::vector<int64_t> fingerprint_of(int n, const std::vector<int>& cols);

// Lexicographically smallest fingerprint over all placements.
std::optional<std::vector<int64_t>> min_fingerprint(int n);

// Checks optimality of a claimed LP solution from first principles: primal
// feasibility, dual sign conditions, reduced costs recomputed from the
// problem data, and complementary slackness. Returns "" when it holds.
std::string certify_optimal(const nqueens::LpProblem& p, const nqueens::SparseVector& objective,
                            const std::vector<nqueens::Rational>& x,
                            const std::vector<nqueens::Rational>& y);

// Exact value of objective . x.
nqueens::Rational evaluate(const nqueens::SparseVector& objective,
                           const std::vector<nqueens::Rational>& x);

}  // namespace oracle

#endif  // NQUEENS_TESTS_ORACLES_HPP_
