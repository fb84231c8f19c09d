// Random inputs shared by the property tests and the acceptance runner.
#ifndef NQUEENS_TESTS_SCENARIOS_HPP_
#define NQUEENS_TESTS_SCENARIOS_HPP_

#include <random>
#include <string>
#include <vector>

#include "nqueens/lp.hpp"
#include "nqueens/model.hpp"

namespace scenario {

// Base relaxation of an n x n board with a few cells pinned straight in the
// column bounds (no propagation, so the LP may be infeasible).
nqueens::LpProblem random_fixed_lp(std::mt19937& rng, int n, int max_fixings);

// Objective with small integer coefficients on a random subset of columns.
nqueens::SparseVector random_objective(std::mt19937& rng, int num_cols, double density = 0.3);

// Point in [0,1]^(n*n) that is fractional somewhere, built from a random
// convex combination of placements plus noise on a few cells.
std::vector<nqueens::Rational> random_fractional_point(std::mt19937& rng, int n,
                                                       const std::vector<std::vector<int>>& sols);

// Re-derives every stage value of a lex solve: stage k must equal the optimum
// of objs[k] with objs[0..k-1] pinned to their stage values, solved from
// scratch and certified by oracle::certify_optimal. Returns "" when all hold.
std::string check_lex_stages(const nqueens::LpProblem& p, const nqueens::ObjectiveSequence& objs,
                             const std::vector<nqueens::Rational>& stage_values);

}  // namespace scenario

#endif  // NQUEENS_TESTS_SCENARIOS_HPP_
