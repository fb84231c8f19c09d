#ifndef NQUEENS_MODEL_LP_HPP_
#define NQUEENS_MODEL_LP_HPP_

#include <optional>
#include <vector>

#include "nqueens/lp.hpp"
#include "nqueens/model.hpp"
#include "nqueens/simplex.hpp"

namespace nqueens {

// Column k of every LP built here is the cell with row-major index k.
LpRow to_lp_row(int n, const std::vector<CutTerm>& terms, RowSense sense,
                int64_t rhs);
LpRow to_lp_row(int n, const Cut& cut);
LpRow to_lp_row(int n, const LinearEquality& row);

// Relaxation of `state`: one [0,1] column per cell (fixed cells get lo = hi),
// the base constraints, then the extra rows and cuts. No objective.
LpProblem build_lp(const ModelState& state);

// sum_j j * x[row][j].
SparseVector row_objective(int n, int row);
// (-x) for every free cell, row-major: the lex-max order on the x space.
ObjectiveSequence lex_max_sequence(const ModelState& state);

// A warm-startable relaxation kept in step with a ModelState. Cuts added
// here live for the lifetime of the object.
template <class Num>
class ModelLp {
 public:
  explicit ModelLp(const ModelState& state, Tolerances tol = {})
      : n_(state.n()), tol_(tol), lp_(build_lp(state), tol) {}

  int n() const { return n_; }
  const Tolerances& tol() const { return tol_; }
  Simplex<Num>& engine() { return lp_; }
  const Simplex<Num>& engine() const { return lp_; }

  // Copies the cell bounds of `state` into the LP.
  void sync_bounds(const ModelState& state);
  // Returns the LP row index.
  int add_cut(const Cut& cut) { return lp_.add_row(to_lp_row(n_, cut)); }
  void add_row(const LinearEquality& row) { lp_.add_row(to_lp_row(n_, row)); }

  LpStatus solve() { return lp_.optimize(); }
  const Num& value(int index) const { return lp_.value(index); }
  std::vector<Num> point() const { return lp_.values(); }
  bool is_one(int index) const;
  bool is_integral() const;

 private:
  int n_;
  Tolerances tol_;
  Simplex<Num> lp_;
};

enum class RowStepStatus {
  kRowFixed,    // every cell of the row is fixed; move on to the next row
  kBranch,      // first free cell sits at 1 and the subtree is not decided
  kFound,       // integral and lex-certified: the subtree's first solution
  kInfeasible,
  kLimit,       // the LP hit its iteration or time limit
};

struct RowStepResult {
  RowStepStatus status = RowStepStatus::kInfeasible;
  std::optional<Cell> stopped_at;
  int zero_fixings = 0;
  bool certified = false;  // a full lex solve was needed
};

// Processes `row` (the first row with a free cell): minimise sum_j j x_rj,
// then fix the first free cell of the row to 0 while its value is below 1,
// reoptimising each time. A first free cell at value 1 stops the loop. When
// the whole LP point is integral at that moment, a full lex solve over the
// remaining free cells decides between kFound and kBranch.
template <class Num>
RowStepResult row_lex_step(ModelState& state, ModelLp<Num>& lp, int row);

extern template class ModelLp<double>;
extern template class ModelLp<Rational>;

}  // namespace nqueens

#endif  // NQUEENS_MODEL_LP_HPP_
