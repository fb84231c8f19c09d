#ifndef NQUEENS_LP_HPP_
#define NQUEENS_LP_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nqueens/numeric.hpp"

namespace nqueens {

enum class RowSense : int8_t { kLessEqual, kEqual };

// (column, coefficient) pairs.
using SparseVector = std::vector<std::pair<int, Rational>>;

struct LpRow {
  SparseVector terms;
  RowSense sense = RowSense::kLessEqual;
  Rational rhs;
};

// min objective.x  s.t.  rows,  lower <= x <= upper.
// Every structural column is boxed; inequality rows get a slack in [0, inf).
struct LpProblem {
  int num_cols = 0;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::vector<LpRow> rows;
  SparseVector objective;

  int add_column(Rational lo, Rational hi) {
    lower.push_back(std::move(lo));
    upper.push_back(std::move(hi));
    return num_cols++;
  }
};

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kTimeLimit,
};

std::string to_string(LpStatus s);

enum class VarStatus : int8_t { kBasic, kAtLower, kAtUpper };

template <class Num>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Num> values;         // structural columns
  std::vector<Num> slack_values;   // one per row
  std::vector<Num> reduced_costs;  // structural columns
  std::vector<Num> row_duals;
  Num objective{};
  // Structural columns first, then one slack per row.
  std::vector<VarStatus> basis;
  // Optimal value of each objective solved by lex_solve, in order.
  std::vector<Num> stage_values;
  int64_t pivots = 0;
};

// Objectives to minimise in order, each over structural columns.
using ObjectiveSequence = std::vector<SparseVector>;

// Cold solve from the slack basis.
template <class Num = Rational>
LpSolution<Num> solve_primal(const LpProblem& p, const Tolerances& tol = {});

// Warm solve of `p` from the basis recorded in `prior` (same columns and
// rows; bounds may have changed).
template <class Num = Rational>
LpSolution<Num> reoptimize_dual(const LpProblem& p, const LpSolution<Num>& prior,
                                const Tolerances& tol = {});

// Lexicographic optimum over `objs`: each stage is optimal for its objective
// on the optimal face of all previous ones. Bounds are restored afterwards.
template <class Num = Rational>
LpSolution<Num> lex_solve(const LpProblem& p, const ObjectiveSequence& objs,
                          const Tolerances& tol = {});

}  // namespace nqueens

#endif  // NQUEENS_LP_HPP_
