#ifndef NQUEENS_MODEL_HPP_
#define NQUEENS_MODEL_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "nqueens/board.hpp"
#include "nqueens/linear.hpp"

namespace nqueens {

enum class CellState : int8_t { kFree, kZero, kOne };

enum class ConstraintKind : int8_t { kRow, kColumn, kDiffDiagonal, kSumDiagonal };

// One base clique constraint. Rows and columns are equalities (= 1),
// diagonals are packing constraints (<= 1). Members are row-major indices.
struct CliqueConstraint {
  ConstraintKind kind;
  int key;  // row, column, row - col or row + col
  bool equality;
  std::vector<int> members;
};

enum class PropagationStatus { kConsistent, kInfeasible };

struct PropagationResult {
  std::vector<std::pair<Cell, int>> new_fixings;
  PropagationStatus status = PropagationStatus::kConsistent;

  bool ok() const { return status == PropagationStatus::kConsistent; }
};

// The 0/1 model on an n x n board: cell fixings over the base clique
// constraints, plus cuts and equality rows that only the LP sees.
//
// fix() and forbid_prefix() propagate eagerly to a fixpoint: a cell at 1
// zeroes every clique-mate, and a row/column whose members are all zero but
// one forces the survivor to 1. Once a propagation fails the state stays
// infeasible. Copying is cheap (the constraint registry is shared).
class ModelState {
 public:
  explicit ModelState(int n);

  int n() const { return n_; }
  int num_cells() const { return n_ * n_; }

  CellState state(int index) const { return cells_[index]; }
  CellState state(Cell c) const { return cells_[cell_index(n_, c)]; }
  bool is_free(int index) const { return cells_[index] == CellState::kFree; }
  bool infeasible() const { return infeasible_; }

  const std::vector<CliqueConstraint>& constraints() const {
    return registry_->constraints;
  }
  // Indices into constraints() that contain the cell.
  const std::vector<int>& constraints_of(int index) const {
    return registry_->cell_constraints[index];
  }

  PropagationResult fix(Cell cell, int value);
  PropagationResult forbid_prefix(int row, int bound);
  // Re-checks every equality; needed once on a fresh model (e.g. n = 1).
  PropagationResult propagate();

  std::optional<int> first_free_row() const;
  // Column of the queen fixed in `row`, if any.
  std::optional<int> fixed_column(int row) const;
  // Rows 1..k that carry a fixed queen, as a column sequence.
  std::vector<int> fixed_prefix() const;
  // The placement when every row has a queen.
  std::optional<Permutation> placement() const;
  int num_free() const;

  const std::vector<Cut>& extra_cuts() const { return extra_cuts_; }
  const std::vector<LinearEquality>& extra_rows() const { return extra_rows_; }
  void add_cut(Cut cut) { extra_cuts_.push_back(std::move(cut)); }
  void add_row(LinearEquality row) { extra_rows_.push_back(std::move(row)); }

 private:
  struct Registry {
    std::vector<CliqueConstraint> constraints;
    std::vector<std::vector<int>> cell_constraints;
  };

  bool assign(int index, CellState value, std::vector<int>& queue,
              PropagationResult& result);
  PropagationResult run(std::vector<int> queue, PropagationResult result);

  int n_;
  std::shared_ptr<const Registry> registry_;
  std::vector<CellState> cells_;
  std::vector<int> free_count_;
  std::vector<int> one_count_;
  std::vector<Cut> extra_cuts_;
  std::vector<LinearEquality> extra_rows_;
  bool infeasible_ = false;
};

// The base model: n row equalities, n column equalities and one packing
// constraint per diagonal of length >= 2. All cells free.
inline ModelState build_base_model(int n) { return ModelState(n); }

// True iff `p` satisfies every fixing, extra row and cut of `state`.
bool satisfies(const ModelState& state, const Permutation& p);

}  // namespace nqueens

#endif  // NQUEENS_MODEL_HPP_
