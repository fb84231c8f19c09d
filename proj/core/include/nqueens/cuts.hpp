#ifndef NQUEENS_CUTS_HPP_
#define NQUEENS_CUTS_HPP_

#include <optional>
#include <vector>

#include "nqueens/linear.hpp"
#include "nqueens/model.hpp"
#include "nqueens/numeric.hpp"

namespace nqueens {

// Every member of one clique family centred at (i, j) with offset h, with
// off-board cells dropped. Returns an empty term list when fewer than two
// cells remain on the board.
//   plus:   (i,j) (i,j+h) (i+h,j) (i-h,j) (i,j-h)
//   X:      (i,j) (i+h,j+h) (i-h,j+h) (i-h,j-h) (i+h,j-h)
//   square: (i,j) (i+h,j) (i+h,j+h) (i,j+h)
std::vector<CutTerm> clique_members(int n, CutKind kind, int i, int j, int h);

// Violated members of the plus, X and square clique families, one cut per
// distinct cell set. `x` holds one value per cell, row-major.
template <class Num>
std::vector<Cut> separate_cliques(const ModelState& state,
                                  const std::vector<Num>& x,
                                  const Tolerances& tol = {});

// Violated odd-cycle inequalities sum_O x <= (|O| - 1) / 2 found by shortest
// odd closed walks in the conflict graph of the LP-positive cells, with edge
// weights max(0, 1 - x_u - x_v). Not guaranteed to find every violated cycle.
template <class Num>
std::vector<Cut> separate_odd_cycles(const ModelState& state,
                                     const std::vector<Num>& x,
                                     const Tolerances& tol = {});

// The lexicographic nogood of a lex-optimal point: with x_f the first
// fractional cell in row-major order and F the earlier cells at 1,
// sum_F x + x_f <= |F|. Empty when x is integral.
template <class Num>
std::optional<Cut> make_lex_nogood(int n, const std::vector<Num>& x,
                                   const Tolerances& tol = {});

// Left-hand side minus right-hand side at a fractional point.
template <class Num>
Num cut_violation(int n, const Cut& cut, const std::vector<Num>& x);

}  // namespace nqueens

#endif  // NQUEENS_CUTS_HPP_
