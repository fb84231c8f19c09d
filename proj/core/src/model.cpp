#include "nqueens/model.hpp"

#include <stdexcept>

namespace nqueens {

ModelState::ModelState(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("board size must be >= 1");
  auto registry = std::make_shared<Registry>();
  auto& cons = registry->constraints;
  for (int i = 1; i <= n; ++i) {
    CliqueConstraint c{ConstraintKind::kRow, i, true, {}};
    for (int j = 1; j <= n; ++j) c.members.push_back(cell_index(n, {i, j}));
    cons.push_back(std::move(c));
  }
  for (int j = 1; j <= n; ++j) {
    CliqueConstraint c{ConstraintKind::kColumn, j, true, {}};
    for (int i = 1; i <= n; ++i) c.members.push_back(cell_index(n, {i, j}));
    cons.push_back(std::move(c));
  }
  // Length-1 diagonals are vacuous and dropped.
  for (int d = 1 - n; d <= n - 1; ++d) {
    CliqueConstraint c{ConstraintKind::kDiffDiagonal, d, false, {}};
    for (int i = 1; i <= n; ++i) {
      const int j = i - d;
      if (j >= 1 && j <= n) c.members.push_back(cell_index(n, {i, j}));
    }
    if (c.members.size() >= 2) cons.push_back(std::move(c));
  }
  for (int s = 2; s <= 2 * n; ++s) {
    CliqueConstraint c{ConstraintKind::kSumDiagonal, s, false, {}};
    for (int i = 1; i <= n; ++i) {
      const int j = s - i;
      if (j >= 1 && j <= n) c.members.push_back(cell_index(n, {i, j}));
    }
    if (c.members.size() >= 2) cons.push_back(std::move(c));
  }
  registry->cell_constraints.resize(n * n);
  for (int k = 0; k < static_cast<int>(cons.size()); ++k) {
    for (int m : cons[k].members) registry->cell_constraints[m].push_back(k);
  }
  free_count_.reserve(cons.size());
  for (const auto& c : cons) {
    free_count_.push_back(static_cast<int>(c.members.size()));
  }
  one_count_.assign(cons.size(), 0);
  cells_.assign(n * n, CellState::kFree);
  registry_ = std::move(registry);
}

bool ModelState::assign(int index, CellState value, std::vector<int>& queue,
                        PropagationResult& result) {
  cells_[index] = value;
  result.new_fixings.emplace_back(index_cell(n_, index),
                                  value == CellState::kOne ? 1 : 0);
  bool ok = true;
  for (int k : registry_->cell_constraints[index]) {
    --free_count_[k];
    if (value == CellState::kOne && ++one_count_[k] > 1) ok = false;
  }
  queue.push_back(index);
  return ok;
}

PropagationResult ModelState::run(std::vector<int> queue,
                                  PropagationResult result) {
  const auto& cons = registry_->constraints;
  auto fail = [&]() {
    infeasible_ = true;
    result.status = PropagationStatus::kInfeasible;
    return result;
  };
  while (!queue.empty()) {
    const int cell = queue.back();
    queue.pop_back();
    for (int k : registry_->cell_constraints[cell]) {
      const CliqueConstraint& c = cons[k];
      if (cells_[cell] == CellState::kOne) {
        if (one_count_[k] > 1) return fail();
        for (int m : c.members) {
          if (cells_[m] == CellState::kFree) {
            if (!assign(m, CellState::kZero, queue, result)) return fail();
          }
        }
      } else if (c.equality && one_count_[k] == 0) {
        if (free_count_[k] == 0) return fail();
        if (free_count_[k] == 1) {
          for (int m : c.members) {
            if (cells_[m] == CellState::kFree) {
              if (!assign(m, CellState::kOne, queue, result)) return fail();
              break;
            }
          }
        }
      }
    }
  }
  return result;
}

PropagationResult ModelState::fix(Cell cell, int value) {
  PropagationResult result;
  if (cell.row < 1 || cell.row > n_ || cell.col < 1 || cell.col > n_) {
    throw std::out_of_range("cell outside the board");
  }
  if (infeasible_) {
    result.status = PropagationStatus::kInfeasible;
    return result;
  }
  const int index = cell_index(n_, cell);
  const CellState target = value == 1 ? CellState::kOne : CellState::kZero;
  if (cells_[index] == target) return result;
  if (cells_[index] != CellState::kFree) {
    infeasible_ = true;
    result.status = PropagationStatus::kInfeasible;
    return result;
  }
  std::vector<int> queue;
  if (!assign(index, target, queue, result)) {
    infeasible_ = true;
    result.status = PropagationStatus::kInfeasible;
    return result;
  }
  return run(std::move(queue), std::move(result));
}

PropagationResult ModelState::forbid_prefix(int row, int bound) {
  if (row < 1 || row > n_ || bound < 1 || bound > n_) {
    throw std::out_of_range("forbid_prefix: row or bound outside the board");
  }
  PropagationResult result;
  for (int j = 1; j <= bound && result.ok(); ++j) {
    PropagationResult step = fix({row, j}, 0);
    result.new_fixings.insert(result.new_fixings.end(),
                              step.new_fixings.begin(), step.new_fixings.end());
    result.status = step.status;
  }
  return result;
}

PropagationResult ModelState::propagate() {
  PropagationResult result;
  if (infeasible_) {
    result.status = PropagationStatus::kInfeasible;
    return result;
  }
  const auto& cons = registry_->constraints;
  std::vector<int> queue;
  for (int k = 0; k < static_cast<int>(cons.size()); ++k) {
    if (one_count_[k] > 1) {
      infeasible_ = true;
      result.status = PropagationStatus::kInfeasible;
      return result;
    }
    if (!cons[k].equality || one_count_[k] > 0) continue;
    if (free_count_[k] == 0) {
      infeasible_ = true;
      result.status = PropagationStatus::kInfeasible;
      return result;
    }
    if (free_count_[k] == 1) {
      for (int m : cons[k].members) {
        if (cells_[m] == CellState::kFree) {
          if (!assign(m, CellState::kOne, queue, result)) {
            infeasible_ = true;
            result.status = PropagationStatus::kInfeasible;
            return result;
          }
          break;
        }
      }
      result = run(std::move(queue), std::move(result));
      queue.clear();
      if (!result.ok()) return result;
    }
  }
  return result;
}

std::optional<int> ModelState::first_free_row() const {
  for (int i = 0; i < n_ * n_; ++i) {
    if (cells_[i] == CellState::kFree) return i / n_ + 1;
  }
  return std::nullopt;
}

std::optional<int> ModelState::fixed_column(int row) const {
  for (int j = 1; j <= n_; ++j) {
    if (state({row, j}) == CellState::kOne) return j;
  }
  return std::nullopt;
}

std::vector<int> ModelState::fixed_prefix() const {
  std::vector<int> prefix;
  for (int i = 1; i <= n_; ++i) {
    auto col = fixed_column(i);
    if (!col) break;
    prefix.push_back(*col);
  }
  return prefix;
}

std::optional<Permutation> ModelState::placement() const {
  std::vector<int> prefix = fixed_prefix();
  if (static_cast<int>(prefix.size()) != n_) return std::nullopt;
  return Permutation(std::move(prefix));
}

int ModelState::num_free() const {
  int free = 0;
  for (CellState s : cells_) free += s == CellState::kFree;
  return free;
}

bool satisfies(const ModelState& state, const Permutation& p) {
  const int n = state.n();
  if (p.n() != n || !is_feasible(p)) return false;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const CellState s = state.state(Cell{i, j});
      const bool queen = p[i] == j;
      if ((s == CellState::kOne && !queen) || (s == CellState::kZero && queen)) {
        return false;
      }
    }
  }
  for (const Cut& c : state.extra_cuts()) {
    if (evaluate(c.terms, p) > c.rhs) return false;
  }
  for (const LinearEquality& r : state.extra_rows()) {
    if (evaluate(r.terms, p) != r.rhs) return false;
  }
  return true;
}

}  // namespace nqueens
