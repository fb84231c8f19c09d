#include "nqueens/model_lp.hpp"

#include <stdexcept>

namespace nqueens {

LpRow to_lp_row(int n, const std::vector<CutTerm>& terms, RowSense sense,
                int64_t rhs) {
  LpRow row;
  row.sense = sense;
  row.rhs = Rational(static_cast<long>(rhs));
  for (const CutTerm& t : terms) {
    if (t.cell.row < 1 || t.cell.row > n || t.cell.col < 1 || t.cell.col > n) {
      throw std::out_of_range("cut term outside the board");
    }
    row.terms.emplace_back(cell_index(n, t.cell), Rational(static_cast<long>(t.coef)));
  }
  return row;
}

LpRow to_lp_row(int n, const Cut& cut) {
  return to_lp_row(n, cut.terms, RowSense::kLessEqual, cut.rhs);
}

LpRow to_lp_row(int n, const LinearEquality& row) {
  return to_lp_row(n, row.terms, RowSense::kEqual, row.rhs);
}

LpProblem build_lp(const ModelState& state) {
  const int n = state.n();
  LpProblem p;
  for (int k = 0; k < n * n; ++k) {
    const CellState s = state.state(k);
    p.add_column(Rational(s == CellState::kOne ? 1 : 0),
                 Rational(s == CellState::kZero ? 0 : 1));
  }
  for (const CliqueConstraint& c : state.constraints()) {
    LpRow row;
    row.sense = c.equality ? RowSense::kEqual : RowSense::kLessEqual;
    row.rhs = 1;
    for (int m : c.members) row.terms.emplace_back(m, Rational(1));
    p.rows.push_back(std::move(row));
  }
  for (const LinearEquality& e : state.extra_rows()) p.rows.push_back(to_lp_row(n, e));
  for (const Cut& c : state.extra_cuts()) p.rows.push_back(to_lp_row(n, c));
  return p;
}

SparseVector row_objective(int n, int row) {
  SparseVector obj;
  for (int j = 1; j <= n; ++j) obj.emplace_back(cell_index(n, {row, j}), Rational(j));
  return obj;
}

ObjectiveSequence lex_max_sequence(const ModelState& state) {
  ObjectiveSequence objs;
  for (int k = 0; k < state.num_cells(); ++k) {
    if (state.is_free(k)) objs.push_back({{k, Rational(-1)}});
  }
  return objs;
}

template <class Num>
void ModelLp<Num>::sync_bounds(const ModelState& state) {
  for (int k = 0; k < n_ * n_; ++k) {
    const CellState s = state.state(k);
    lp_.set_bounds(k, Num(s == CellState::kOne ? 1 : 0),
                   Num(s == CellState::kZero ? 0 : 1));
  }
}

template <class Num>
bool ModelLp<Num>::is_one(int index) const {
  return NumTraits<Num>::is_zero(Num(1) - lp_.value(index), tol_.integrality);
}

template <class Num>
bool ModelLp<Num>::is_integral() const {
  for (int k = 0; k < n_ * n_; ++k) {
    if (NumTraits<Num>::is_pos(NumTraits<Num>::frac_distance(lp_.value(k)),
                               tol_.integrality)) {
      return false;
    }
  }
  return true;
}

template class ModelLp<double>;
template class ModelLp<Rational>;

namespace {

RowStepStatus from_lp(LpStatus s) {
  return s == LpStatus::kInfeasible ? RowStepStatus::kInfeasible
                                    : RowStepStatus::kLimit;
}

}  // namespace

template <class Num>
RowStepResult row_lex_step(ModelState& state, ModelLp<Num>& lp, int row) {
  const int n = state.n();
  RowStepResult result;
  if (state.infeasible()) return result;
  lp.sync_bounds(state);
  lp.engine().set_objective(row_objective(n, row));
  LpStatus s = lp.solve();
  if (s != LpStatus::kOptimal) {
    result.status = from_lp(s);
    return result;
  }
  while (true) {
    int col = 0;
    for (int j = 1; j <= n; ++j) {
      if (state.is_free(cell_index(n, {row, j}))) {
        col = j;
        break;
      }
    }
    if (col == 0) {
      result.status = state.fixed_column(row) ? RowStepStatus::kRowFixed
                                              : RowStepStatus::kInfeasible;
      return result;
    }
    const Cell cell{row, col};
    const int index = cell_index(n, cell);
    if (!lp.is_one(index)) {
      // The row objective puts all its mass on the first free cell whenever
      // the relaxation allows it, so a value below 1 rules that cell out.
      ++result.zero_fixings;
      if (!state.fix(cell, 0).ok()) return result;
      lp.sync_bounds(state);
      s = lp.solve();
      if (s != LpStatus::kOptimal) {
        result.status = from_lp(s);
        return result;
      }
      continue;
    }
    result.stopped_at = cell;
    if (lp.is_integral()) {
      result.certified = true;
      LexOptions opts;
      opts.stop_at_fractional = true;
      LexOutcome<Num> out = lp.engine().lex_optimize(lex_max_sequence(state), opts);
      if (out.status != LpStatus::kOptimal) {
        result.status = from_lp(out.status);
        return result;
      }
      if (!out.stopped_at && lp.is_integral()) {
        result.status = RowStepStatus::kFound;
        return result;
      }
    }
    result.status = RowStepStatus::kBranch;
    return result;
  }
}

template RowStepResult row_lex_step(ModelState&, ModelLp<double>&, int);
template RowStepResult row_lex_step(ModelState&, ModelLp<Rational>&, int);

}  // namespace nqueens
