#ifndef NQUEENS_SIMPLEX_HPP_
#define NQUEENS_SIMPLEX_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nqueens/deadline.hpp"
#include "nqueens/lp.hpp"
#include "nqueens/numeric.hpp"

namespace nqueens {

struct LexOptions {
  // Stop after the first single-variable stage whose optimum is fractional.
  // Values of later variables are then feasible but not lex-optimal.
  bool stop_at_fractional = false;
};

template <class Num>
struct LexOutcome {
  LpStatus status = LpStatus::kOptimal;
  std::vector<Num> stage_values;
  // Index of the stage that stopped the sequence early, if any.
  std::optional<int> stopped_at;
};

// Stages kept on the optimal face between lex_resume calls. Each stage
// records the bound changes it made so it can be undone on its own.
template <class Num>
struct LexTrail {
  struct Saved {
    int var;
    Num lo;
    Num hi;
    char has_hi;
  };
  std::vector<Saved> saved;
  std::vector<std::size_t> marks;
  std::vector<Num> values;

  int depth() const { return static_cast<int>(marks.size()); }
  // Follows a variable renumbering from Simplex::remove_rows.
  void remap(const std::vector<int>& var_map) {
    for (auto& s : saved) s.var = var_map[s.var];
  }
};

// Bounded-variable simplex over a full tableau T = B^-1 [A | I].
//
// Variables are the structural columns followed by one slack per row
// (a.x + s = b; s in [0, inf) for <= rows, [0, 0] for = rows). Both the
// primal and the dual algorithm run on the same tableau, so bound changes,
// new rows and new objectives are all warm-started from the current basis.
// Dantzig pricing switches to Bland's rule after 10 * (rows + vars) pivots
// in one call.
//
// Columns of nonbasic fixed structurals are not updated by pivots; they are
// rebuilt from the slack block (which holds B^-1) when the variable is freed.
template <class Num>
class Simplex {
 public:
  explicit Simplex(const LpProblem& problem, Tolerances tol = {});

  int num_cols() const { return num_struct_; }
  int num_rows() const { return num_rows_; }
  int num_vars() const { return num_struct_ + num_rows_; }

  void set_objective(const SparseVector& objective);
  void set_objective_num(const std::vector<std::pair<int, Num>>& objective);
  void set_bounds(int var, const Num& lo, const Num& hi);
  const Num& lower(int var) const { return lo_[var]; }
  const Num& upper(int var) const { return hi_[var]; }
  bool is_fixed(int var) const { return has_hi_[var] && lo_[var] == hi_[var]; }

  // Appends a row; its slack enters the basis. Returns the row index.
  int add_row(const LpRow& row);
  // Drops rows whose slack is basic; the basis stays optimal for what is
  // left. Returns the new index of every old variable (-1 when dropped).
  std::vector<int> remove_rows(const std::vector<int>& rows);
  int slack_of(int row) const { return num_struct_ + row; }

  // Reaches optimality from the current basis: primal simplex when the basis
  // is primal feasible, dual simplex when it can be made dual feasible,
  // otherwise a zero-cost dual phase followed by the primal simplex.
  LpStatus optimize();
  LexOutcome<Num> lex_optimize(const ObjectiveSequence& objs,
                               const LexOptions& options = {});
  // Incremental lex optimization for a shrinking feasible region. Stages in
  // `trail` stay fixed as long as their face is still feasible; otherwise
  // they are undone from the last one until it is. A stage that stops the
  // run early is not kept.
  LexOutcome<Num> lex_resume(const ObjectiveSequence& objs, const LexOptions& options,
                             LexTrail<Num>& trail);
  void lex_pop_stage(LexTrail<Num>& trail);
  void lex_unwind(LexTrail<Num>& trail);

  // Rebuilds the tableau for the given statuses (structural then slacks).
  void load_basis(const std::vector<VarStatus>& statuses);

  LpStatus status() const { return status_; }
  const Num& value(int var) const { return x_[var]; }
  std::vector<Num> values() const;
  Num objective_value() const;
  Num reduced_cost(int var);
  VarStatus var_status(int var) const;
  bool primal_feasible() const;
  int64_t pivots() const { return pivots_; }
  void set_iteration_limit(int64_t limit) { iteration_limit_ = limit; }
  // Checked before every pivot; an expired deadline stops with kTimeLimit.
  void set_deadline(const Deadline* deadline) { deadline_ = deadline; }

  LpSolution<Num> solution();

 private:
  using Traits = NumTraits<Num>;

  bool is_basic(int var) const { return row_of_[var] >= 0; }
  bool out_of_time(int64_t /*iter*/) const {
    return deadline_ != nullptr && deadline_->expired();
  }
  void refresh_column(int var);
  void mark_stale_if_fixed(int var);
  void shift_nonbasic(int var, const Num& target);
  void pivot(int row, int col);
  void compute_reduced_costs();
  bool make_dual_feasible();
  LpStatus primal_simplex();
  LpStatus dual_simplex();
  void rebuild(const std::vector<int>& basic_vars);
  void recompute_basic_values();
  void maybe_refactor();

  Tolerances tol_;
  int num_struct_ = 0;
  int num_rows_ = 0;
  // Original data.
  std::vector<std::vector<std::pair<int, Num>>> row_terms_;
  std::vector<Num> row_rhs_;
  std::vector<std::vector<std::pair<int, Num>>> col_terms_;
  // Tableau state.
  std::vector<std::vector<Num>> tab_;
  std::vector<Num> rhs_;
  std::vector<Num> lo_;
  std::vector<Num> hi_;
  std::vector<char> has_hi_;
  std::vector<Num> x_;
  std::vector<Num> cost_;
  std::vector<Num> d_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<char> at_upper_;
  std::vector<char> stale_;
  std::vector<int> nz_;
  LpStatus status_ = LpStatus::kInfeasible;
  int64_t pivots_ = 0;
  int64_t pivots_since_refactor_ = 0;
  int64_t iteration_limit_ = 0;
  const Deadline* deadline_ = nullptr;
};

extern template class Simplex<double>;
extern template class Simplex<Rational>;

}  // namespace nqueens

#endif  // NQUEENS_SIMPLEX_HPP_
