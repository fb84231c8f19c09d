#include "nqueens/simplex.hpp"

#include <stdexcept>
#include <tuple>

namespace nqueens {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
    case LpStatus::kTimeLimit:
      return "time-limit";
  }
  return "unknown";
}

namespace {

template <class Num>
bool nonzero(const Num& x) {
  if constexpr (NumTraits<Num>::kExact) {
    return sgn(x) != 0;
  } else {
    return x != 0.0;
  }
}

}  // namespace

template <class Num>
Simplex<Num>::Simplex(const LpProblem& p, Tolerances tol) : tol_(tol) {
  num_struct_ = p.num_cols;
  num_rows_ = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.lower.size()) != num_struct_ ||
      static_cast<int>(p.upper.size()) != num_struct_) {
    throw std::invalid_argument("LpProblem: bounds size mismatch");
  }
  const int vars = num_vars();
  lo_.assign(vars, Num(0));
  hi_.assign(vars, Num(0));
  has_hi_.assign(vars, 1);
  for (int j = 0; j < num_struct_; ++j) {
    if (p.lower[j] > p.upper[j]) {
      throw std::invalid_argument("LpProblem: lower bound above upper bound");
    }
    lo_[j] = Traits::from_rational(p.lower[j]);
    hi_[j] = Traits::from_rational(p.upper[j]);
  }
  col_terms_.resize(num_struct_);
  for (int r = 0; r < num_rows_; ++r) {
    const LpRow& row = p.rows[r];
    std::vector<Num> dense_check;
    std::vector<std::pair<int, Num>> terms;
    for (const auto& [j, a] : row.terms) {
      if (j < 0 || j >= num_struct_) {
        throw std::invalid_argument("LpProblem: row references unknown column");
      }
      if (sgn(a) == 0) continue;
      bool merged = false;
      for (auto& t : terms) {
        if (t.first == j) {
          t.second += Traits::from_rational(a);
          merged = true;
        }
      }
      if (!merged) terms.emplace_back(j, Traits::from_rational(a));
    }
    for (const auto& [j, a] : terms) col_terms_[j].emplace_back(r, a);
    row_terms_.push_back(std::move(terms));
    row_rhs_.push_back(Traits::from_rational(row.rhs));
    const int slack = num_struct_ + r;
    if (row.sense == RowSense::kLessEqual) has_hi_[slack] = 0;
  }
  x_.assign(vars, Num(0));
  for (int j = 0; j < num_struct_; ++j) x_[j] = lo_[j];
  at_upper_.assign(vars, 0);
  cost_.assign(vars, Num(0));
  std::vector<int> slack_basis;
  for (int r = 0; r < num_rows_; ++r) slack_basis.push_back(num_struct_ + r);
  rebuild(slack_basis);
  iteration_limit_ = 200000 + 100LL * (vars + num_rows_);
  set_objective(p.objective);
}

template <class Num>
void Simplex<Num>::rebuild(const std::vector<int>& basic_vars) {
  const int vars = num_vars();
  if (static_cast<int>(basic_vars.size()) != num_rows_) {
    throw std::invalid_argument("basis must have one variable per row");
  }
  tab_.assign(num_rows_, std::vector<Num>(vars, Num(0)));
  rhs_ = row_rhs_;
  basis_.assign(num_rows_, -1);
  row_of_.assign(vars, -1);
  stale_.assign(vars, 0);
  for (int r = 0; r < num_rows_; ++r) {
    for (const auto& [j, a] : row_terms_[r]) tab_[r][j] = a;
    tab_[r][num_struct_ + r] = Num(1);
    basis_[r] = num_struct_ + r;
    row_of_[num_struct_ + r] = r;
  }
  std::vector<char> in_target(vars, 0);
  for (int v : basic_vars) in_target[v] = 1;
  for (int v : basic_vars) {
    if (row_of_[v] >= 0) continue;
    int best = -1;
    Num best_abs(0);
    for (int i = 0; i < num_rows_; ++i) {
      const int b = basis_[i];
      if (b < num_struct_ || in_target[b]) continue;
      Num a = Traits::abs(tab_[i][v]);
      if (!Traits::is_pos(a, tol_.pivot)) continue;
      if (best < 0 || a > best_abs) {
        best = i;
        best_abs = a;
      }
    }
    if (best < 0) {
      // Numerically dependent on the columns already placed: keep a slack
      // in its row and leave v at its nearer bound.
      if constexpr (Traits::kExact) throw std::runtime_error("singular basis");
      at_upper_[v] = has_hi_[v] && hi_[v] - x_[v] < x_[v] - lo_[v];
      continue;
    }
    // Tableau-only elimination; values and costs are recomputed below.
    const Num inv = Num(1) / tab_[best][v];
    nz_.clear();
    for (int k = 0; k < vars; ++k) {
      if (nonzero(tab_[best][k])) nz_.push_back(k);
    }
    for (int k : nz_) tab_[best][k] *= inv;
    rhs_[best] *= inv;
    for (int i = 0; i < num_rows_; ++i) {
      if (i == best || !nonzero(tab_[i][v])) continue;
      const Num f = tab_[i][v];
      for (int k : nz_) sub_product(tab_[i][k], f, tab_[best][k]);
      sub_product(rhs_[i], f, rhs_[best]);
      tab_[i][v] = Num(0);
    }
    row_of_[basis_[best]] = -1;
    basis_[best] = v;
    row_of_[v] = best;
  }
  for (int v = 0; v < vars; ++v) {
    if (row_of_[v] < 0) {
      x_[v] = at_upper_[v] && has_hi_[v] ? hi_[v] : lo_[v];
      if (!has_hi_[v]) at_upper_[v] = 0;
    }
  }
  recompute_basic_values();
  compute_reduced_costs();
  for (int v = 0; v < num_struct_; ++v) mark_stale_if_fixed(v);
  pivots_since_refactor_ = 0;
}

template <class Num>
void Simplex<Num>::recompute_basic_values() {
  const int vars = num_vars();
  for (int i = 0; i < num_rows_; ++i) {
    Num value = rhs_[i];
    for (int j = 0; j < vars; ++j) {
      if (row_of_[j] >= 0 || !nonzero(x_[j])) continue;
      sub_product(value, tab_[i][j], x_[j]);
    }
    x_[basis_[i]] = value;
  }
}

template <class Num>
void Simplex<Num>::maybe_refactor() {
  if constexpr (!Traits::kExact) {
    if (pivots_since_refactor_ >= tol_.refactor_interval) {
      for (int j = 0; j < num_struct_; ++j) {
        if (stale_[j]) refresh_column(j);
      }
      std::vector<int> basic = basis_;
      rebuild(basic);
    }
  }
}

template <class Num>
void Simplex<Num>::set_objective(const SparseVector& objective) {
  std::fill(cost_.begin(), cost_.end(), Num(0));
  for (const auto& [j, c] : objective) {
    if (j < 0 || j >= num_struct_) {
      throw std::invalid_argument("objective references unknown column");
    }
    cost_[j] += Traits::from_rational(c);
  }
  compute_reduced_costs();
}

template <class Num>
void Simplex<Num>::set_objective_num(
    const std::vector<std::pair<int, Num>>& objective) {
  std::fill(cost_.begin(), cost_.end(), Num(0));
  for (const auto& [j, c] : objective) cost_[j] += c;
  compute_reduced_costs();
}

template <class Num>
void Simplex<Num>::compute_reduced_costs() {
  const int vars = num_vars();
  d_.assign(vars, Num(0));
  for (int j = 0; j < vars; ++j) {
    if (row_of_[j] < 0) d_[j] = cost_[j];
  }
  for (int i = 0; i < num_rows_; ++i) {
    const Num& cb = cost_[basis_[i]];
    if (!nonzero(cb)) continue;
    const auto& row = tab_[i];
    for (int j = 0; j < vars; ++j) {
      if (row_of_[j] >= 0 || stale_[j] || !nonzero(row[j])) continue;
      sub_product(d_[j], cb, row[j]);
    }
  }
}

template <class Num>
void Simplex<Num>::refresh_column(int var) {
  if (var >= num_struct_) return;
  Num dj = cost_[var];
  for (int i = 0; i < num_rows_; ++i) {
    Num s(0);
    for (const auto& [r, a] : col_terms_[var]) {
      const Num& binv = tab_[i][num_struct_ + r];
      if (nonzero(binv)) s += a * binv;
    }
    tab_[i][var] = s;
    if (nonzero(s)) dj -= cost_[basis_[i]] * s;
  }
  d_[var] = row_of_[var] >= 0 ? Num(0) : dj;
  stale_[var] = 0;
}

template <class Num>
void Simplex<Num>::mark_stale_if_fixed(int var) {
  if (var < num_struct_ && row_of_[var] < 0 && is_fixed(var)) stale_[var] = 1;
}

template <class Num>
void Simplex<Num>::shift_nonbasic(int var, const Num& target) {
  Num delta = target - x_[var];
  if (!nonzero(delta)) return;
  if (stale_[var]) refresh_column(var);
  for (int i = 0; i < num_rows_; ++i) {
    const Num& a = tab_[i][var];
    if (nonzero(a)) sub_product(x_[basis_[i]], a, delta);
  }
  x_[var] = target;
}

template <class Num>
void Simplex<Num>::set_bounds(int var, const Num& lo, const Num& hi) {
  if (var < 0 || var >= num_vars()) throw std::out_of_range("set_bounds");
  if (lo > hi) throw std::invalid_argument("set_bounds: lo > hi");
  if (has_hi_[var] && lo_[var] == lo && hi_[var] == hi) return;
  lo_[var] = lo;
  hi_[var] = hi;
  has_hi_[var] = 1;
  if (row_of_[var] >= 0) return;
  if (stale_[var] && !is_fixed(var)) refresh_column(var);
  if (x_[var] == lo) {
    at_upper_[var] = 0;
  } else if (x_[var] == hi) {
    at_upper_[var] = 1;
  } else {
    if (stale_[var]) refresh_column(var);
    const bool up = Traits::is_neg(d_[var], 0.0);
    at_upper_[var] = up;
    shift_nonbasic(var, up ? hi : lo);
  }
  mark_stale_if_fixed(var);
}

template <class Num>
int Simplex<Num>::add_row(const LpRow& row) {
  const int r = num_rows_;
  const int slack = num_vars();
  std::vector<std::pair<int, Num>> terms;
  for (const auto& [j, a] : row.terms) {
    if (j < 0 || j >= num_struct_) {
      throw std::invalid_argument("add_row: unknown column");
    }
    if (sgn(a) == 0) continue;
    bool merged = false;
    for (auto& t : terms) {
      if (t.first == j) {
        t.second += Traits::from_rational(a);
        merged = true;
      }
    }
    if (!merged) terms.emplace_back(j, Traits::from_rational(a));
  }
  for (auto& tab_row : tab_) tab_row.push_back(Num(0));
  std::vector<Num> t(slack + 1, Num(0));
  Num rhs = Traits::from_rational(row.rhs);
  Num activity(0);
  for (const auto& [j, a] : terms) {
    t[j] = a;
    activity += a * x_[j];
    col_terms_[j].emplace_back(r, a);
  }
  t[slack] = Num(1);
  for (const auto& [j, a] : terms) {
    const int i = row_of_[j];
    if (i < 0) continue;
    const Num factor = t[j];
    if (!nonzero(factor)) continue;
    const auto& src = tab_[i];
    for (int k = 0; k < slack; ++k) {
      if (stale_[k] || !nonzero(src[k])) continue;
      sub_product(t[k], factor, src[k]);
    }
    sub_product(rhs, factor, rhs_[i]);
    t[j] = Num(0);
  }
  for (int k = 0; k < num_struct_; ++k) {
    if (stale_[k]) t[k] = Num(0);
  }
  tab_.push_back(std::move(t));
  rhs_.push_back(rhs);
  row_terms_.push_back(std::move(terms));
  row_rhs_.push_back(Traits::from_rational(row.rhs));
  lo_.push_back(Num(0));
  hi_.push_back(Num(0));
  has_hi_.push_back(row.sense == RowSense::kEqual ? 1 : 0);
  x_.push_back(Traits::from_rational(row.rhs) - activity);
  cost_.push_back(Num(0));
  d_.push_back(Num(0));
  at_upper_.push_back(0);
  stale_.push_back(0);
  basis_.push_back(slack);
  row_of_.push_back(r);
  ++num_rows_;
  return r;
}

template <class Num>
std::vector<int> Simplex<Num>::remove_rows(const std::vector<int>& rows) {
  std::vector<char> drop_row(num_rows_, 0);
  for (int r : rows) {
    if (r < 0 || r >= num_rows_) throw std::out_of_range("remove_rows");
    if (row_of_[slack_of(r)] < 0) throw std::invalid_argument("remove_rows: slack is not basic");
    drop_row[r] = 1;
  }
  const int vars = num_vars();
  std::vector<int> var_map(vars, -1);
  std::vector<int> row_map(num_rows_, -1);
  for (int j = 0; j < num_struct_; ++j) var_map[j] = j;
  int kept = 0;
  for (int r = 0; r < num_rows_; ++r) {
    if (drop_row[r]) continue;
    row_map[r] = kept;
    var_map[slack_of(r)] = num_struct_ + kept;
    ++kept;
  }
  // Tableau positions holding a dropped slack go away with it. The other
  // positions do not depend on the dropped rows (B^-1 has zeros there).
  std::vector<std::vector<Num>> tab;
  std::vector<Num> rhs;
  std::vector<int> basis;
  for (int i = 0; i < num_rows_; ++i) {
    if (var_map[basis_[i]] < 0) continue;
    std::vector<Num> row;
    row.reserve(num_struct_ + kept);
    for (int v = 0; v < vars; ++v) {
      if (var_map[v] >= 0) row.push_back(std::move(tab_[i][v]));
    }
    tab.push_back(std::move(row));
    rhs.push_back(std::move(rhs_[i]));
    basis.push_back(var_map[basis_[i]]);
  }
  auto compact = [&](auto& vec) {
    int w = 0;
    for (int v = 0; v < vars; ++v) {
      if (var_map[v] >= 0) vec[w++] = std::move(vec[v]);
    }
    vec.resize(w);
  };
  compact(lo_);
  compact(hi_);
  compact(has_hi_);
  compact(x_);
  compact(cost_);
  compact(d_);
  compact(at_upper_);
  compact(stale_);
  std::vector<std::vector<std::pair<int, Num>>> row_terms;
  std::vector<Num> row_rhs;
  for (int r = 0; r < num_rows_; ++r) {
    if (drop_row[r]) continue;
    row_terms.push_back(std::move(row_terms_[r]));
    row_rhs.push_back(std::move(row_rhs_[r]));
  }
  for (auto& col : col_terms_) {
    std::vector<std::pair<int, Num>> keep;
    for (auto& [r, a] : col) {
      if (row_map[r] >= 0) keep.emplace_back(row_map[r], std::move(a));
    }
    col = std::move(keep);
  }
  tab_ = std::move(tab);
  rhs_ = std::move(rhs);
  basis_ = std::move(basis);
  row_terms_ = std::move(row_terms);
  row_rhs_ = std::move(row_rhs);
  num_rows_ = kept;
  row_of_.assign(num_vars(), -1);
  for (int i = 0; i < num_rows_; ++i) row_of_[basis_[i]] = i;
  return var_map;
}

template <class Num>
void Simplex<Num>::pivot(int row, int col) {
  const int vars = num_vars();
  auto& prow = tab_[row];
  const Num inv = Num(1) / prow[col];
  nz_.clear();
  for (int k = 0; k < vars; ++k) {
    if (stale_[k]) continue;
    if constexpr (!Traits::kExact) {
      if (std::abs(prow[k]) < 1e-12) {
        prow[k] = 0.0;
        continue;
      }
    }
    if (nonzero(prow[k])) nz_.push_back(k);
  }
  for (int k : nz_) prow[k] *= inv;
  rhs_[row] *= inv;
  prow[col] = Num(1);
  for (int i = 0; i < num_rows_; ++i) {
    if (i == row) continue;
    auto& target = tab_[i];
    if (!nonzero(target[col])) continue;
    const Num f = target[col];
    for (int k : nz_) sub_product(target[k], f, prow[k]);
    sub_product(rhs_[i], f, rhs_[row]);
    target[col] = Num(0);
  }
  if (nonzero(d_[col])) {
    const Num f = d_[col];
    for (int k : nz_) sub_product(d_[k], f, prow[k]);
  }
  d_[col] = Num(0);
  const int leaving = basis_[row];
  basis_[row] = col;
  row_of_[col] = row;
  row_of_[leaving] = -1;
  mark_stale_if_fixed(leaving);
  ++pivots_;
  ++pivots_since_refactor_;
}

template <class Num>
bool Simplex<Num>::primal_feasible() const {
  for (int i = 0; i < num_rows_; ++i) {
    const int b = basis_[i];
    if (Traits::is_neg(x_[b] - lo_[b], tol_.feasibility)) return false;
    if (has_hi_[b] && Traits::is_pos(x_[b] - hi_[b], tol_.feasibility)) {
      return false;
    }
  }
  return true;
}

template <class Num>
bool Simplex<Num>::make_dual_feasible() {
  for (int j = 0; j < num_vars(); ++j) {
    if (row_of_[j] >= 0 || is_fixed(j) || stale_[j]) continue;
    if (!at_upper_[j] && Traits::is_neg(d_[j], tol_.reduced_cost)) {
      if (!has_hi_[j]) return false;
      shift_nonbasic(j, hi_[j]);
      at_upper_[j] = 1;
    } else if (at_upper_[j] && Traits::is_pos(d_[j], tol_.reduced_cost)) {
      shift_nonbasic(j, lo_[j]);
      at_upper_[j] = 0;
    }
  }
  return true;
}

template <class Num>
LpStatus Simplex<Num>::primal_simplex() {
  const int64_t bland_after = 10LL * (num_rows_ + num_vars());
  for (int64_t iter = 0;; ++iter) {
    if (iter >= iteration_limit_) return status_ = LpStatus::kIterationLimit;
    if (out_of_time(iter)) return status_ = LpStatus::kTimeLimit;
    maybe_refactor();
    const bool bland = iter > bland_after;
    const int vars = num_vars();
    int q = -1;
    Num best(0);
    for (int j = 0; j < vars; ++j) {
      if (row_of_[j] >= 0 || is_fixed(j) || stale_[j]) continue;
      const Num& dj = d_[j];
      const bool improving = at_upper_[j] ? Traits::is_pos(dj, tol_.reduced_cost)
                                          : Traits::is_neg(dj, tol_.reduced_cost);
      if (!improving) continue;
      if (bland) {
        q = j;
        break;
      }
      Num score = Traits::abs(dj);
      if (q < 0 || score > best) {
        q = j;
        best = score;
      }
    }
    if (q < 0) return status_ = LpStatus::kOptimal;

    const bool increase = !at_upper_[q];
    bool bounded = has_hi_[q];
    Num step = bounded ? hi_[q] - lo_[q] : Num(0);
    int leave = -1;
    bool leave_to_lower = false;
    Num leave_abs(0);
    for (int i = 0; i < num_rows_; ++i) {
      const Num& a = tab_[i][q];
      if (!Traits::is_pos(Traits::abs(a), tol_.pivot)) continue;
      const int b = basis_[i];
      // x_b moves by -a per unit increase of x_q.
      const bool decreasing = increase == (a > 0);
      Num limit;
      if (decreasing) {
        limit = (x_[b] - lo_[b]) / Traits::abs(a);
      } else {
        if (!has_hi_[b]) continue;
        limit = (hi_[b] - x_[b]) / Traits::abs(a);
      }
      if (limit < 0) limit = Num(0);
      // Ratios within the pivot tolerance count as ties so that Bland's
      // rule stays consistent under rounding noise.
      bool take = !bounded || Traits::is_neg(limit - step, tol_.pivot);
      if (!take && leave >= 0 && Traits::is_zero(limit - step, tol_.pivot)) {
        take = bland ? b < basis_[leave] : Traits::abs(a) > leave_abs;
      }
      if (take) {
        bounded = true;
        step = limit;
        leave = i;
        leave_to_lower = decreasing;
        leave_abs = Traits::abs(a);
      }
    }
    if (!bounded) return status_ = LpStatus::kUnbounded;
    const Num delta = increase ? step : Num(-step);
    if (nonzero(delta)) {
      for (int i = 0; i < num_rows_; ++i) {
        const Num& a = tab_[i][q];
        if (nonzero(a)) sub_product(x_[basis_[i]], a, delta);
      }
    }
    if (leave < 0) {
      x_[q] = increase ? hi_[q] : lo_[q];
      at_upper_[q] = increase;
      continue;
    }
    x_[q] += delta;
    const int b = basis_[leave];
    x_[b] = leave_to_lower ? lo_[b] : hi_[b];
    at_upper_[b] = !leave_to_lower;
    pivot(leave, q);
  }
}

template <class Num>
LpStatus Simplex<Num>::dual_simplex() {
  const int64_t bland_after = 10LL * (num_rows_ + num_vars());
  for (int64_t iter = 0;; ++iter) {
    if (iter >= iteration_limit_) return status_ = LpStatus::kIterationLimit;
    if (out_of_time(iter)) return status_ = LpStatus::kTimeLimit;
    maybe_refactor();
    const bool bland = iter > bland_after;
    int r = -1;
    Num worst(0);
    for (int i = 0; i < num_rows_; ++i) {
      const int b = basis_[i];
      Num viol;
      if (Traits::is_neg(x_[b] - lo_[b], tol_.feasibility)) {
        viol = lo_[b] - x_[b];
      } else if (has_hi_[b] && Traits::is_pos(x_[b] - hi_[b], tol_.feasibility)) {
        viol = x_[b] - hi_[b];
      } else {
        continue;
      }
      const bool take = r < 0 || (bland ? b < basis_[r] : viol > worst);
      if (take) {
        r = i;
        worst = viol;
      }
    }
    if (r < 0) return status_ = LpStatus::kOptimal;

    const int b = basis_[r];
    const bool going_up = x_[b] < lo_[b];
    const Num target = going_up ? lo_[b] : hi_[b];
    const auto& row = tab_[r];
    int q = -1;
    Num best_ratio(0);
    Num best_abs(0);
    for (int j = 0; j < num_vars(); ++j) {
      if (row_of_[j] >= 0 || is_fixed(j) || stale_[j]) continue;
      const Num& a = row[j];
      if (!Traits::is_pos(Traits::abs(a), tol_.pivot)) continue;
      // x_b moves by -a per unit increase of x_j.
      const bool eligible = at_upper_[j] ? (going_up ? a > 0 : a < 0)
                                         : (going_up ? a < 0 : a > 0);
      if (!eligible) continue;
      Num dj = d_[j];
      if (at_upper_[j] ? dj > 0 : dj < 0) dj = Num(0);
      const Num ratio = Traits::abs(dj) / Traits::abs(a);
      bool take = q < 0 || Traits::is_neg(ratio - best_ratio, tol_.pivot);
      if (!take && !bland && Traits::is_zero(ratio - best_ratio, tol_.pivot)) {
        take = Traits::abs(a) > best_abs;
      }
      if (take) {
        q = j;
        best_ratio = ratio;
        best_abs = Traits::abs(a);
      }
    }
    if (q < 0) return status_ = LpStatus::kInfeasible;

    const Num delta = (x_[b] - target) / row[q];
    for (int i = 0; i < num_rows_; ++i) {
      const Num& a = tab_[i][q];
      if (nonzero(a)) sub_product(x_[basis_[i]], a, delta);
    }
    x_[q] += delta;
    x_[b] = target;
    at_upper_[b] = !going_up;
    pivot(r, q);
  }
}

template <class Num>
LpStatus Simplex<Num>::optimize() {
  maybe_refactor();
  if (primal_feasible()) return primal_simplex();
  if (make_dual_feasible()) {
    if (dual_simplex() != LpStatus::kOptimal) return status_;
    return primal_simplex();
  }
  std::vector<Num> saved = cost_;
  std::fill(cost_.begin(), cost_.end(), Num(0));
  compute_reduced_costs();
  const LpStatus phase1 = dual_simplex();
  cost_ = std::move(saved);
  compute_reduced_costs();
  if (phase1 != LpStatus::kOptimal) return status_ = phase1;
  return primal_simplex();
}

template <class Num>
LexOutcome<Num> Simplex<Num>::lex_optimize(const ObjectiveSequence& objs,
                                           const LexOptions& options) {
  LexTrail<Num> trail;
  LexOutcome<Num> out = lex_resume(objs, options, trail);
  lex_unwind(trail);
  return out;
}

template <class Num>
void Simplex<Num>::lex_pop_stage(LexTrail<Num>& trail) {
  const std::size_t mark = trail.marks.back();
  while (trail.saved.size() > mark) {
    const auto& s = trail.saved.back();
    set_bounds(s.var, s.lo, s.hi);
    has_hi_[s.var] = s.has_hi;
    if (!s.has_hi) at_upper_[s.var] = 0;
    trail.saved.pop_back();
  }
  trail.marks.pop_back();
  trail.values.pop_back();
}

template <class Num>
void Simplex<Num>::lex_unwind(LexTrail<Num>& trail) {
  while (trail.depth() > 0) lex_pop_stage(trail);
}

template <class Num>
LexOutcome<Num> Simplex<Num>::lex_resume(const ObjectiveSequence& objs,
                                         const LexOptions& options,
                                         LexTrail<Num>& trail) {
  LexOutcome<Num> out;
  if (trail.depth() > static_cast<int>(objs.size())) {
    throw std::invalid_argument("lex_resume: trail deeper than objective sequence");
  }
  // The kept faces only shrank, so the first one still feasible carries the
  // same stage values.
  while (!primal_feasible() || status_ != LpStatus::kOptimal) {
    const LpStatus s = optimize();
    if (s == LpStatus::kOptimal) break;
    if (s != LpStatus::kInfeasible || trail.depth() == 0) {
      out.status = s;
      return out;
    }
    lex_pop_stage(trail);
  }
  auto restrict_to = [&](int var, const Num& value) {
    trail.saved.push_back({var, lo_[var], hi_[var], has_hi_[var]});
    set_bounds(var, value, value);
  };
  auto stop_here = [&](int k, const Num& v) {
    out.stage_values = trail.values;
    out.stage_values.push_back(v);
    out.stopped_at = k;
    lex_pop_stage(trail);
  };
  for (int k = trail.depth(); k < static_cast<int>(objs.size()); ++k) {
    const SparseVector& obj = objs[k];
    trail.marks.push_back(trail.saved.size());
    int single = -1;
    if (obj.size() == 1) {
      const auto& [j, c] = obj.front();
      const Num coef = Traits::from_rational(c);
      single = j;
      bool at_best = is_fixed(j) || sgn(c) == 0;
      Num best_value = x_[j];
      if (!at_best && sgn(c) < 0 &&
          Traits::is_zero(x_[j] - hi_[j], tol_.feasibility)) {
        at_best = true;
        best_value = hi_[j];
      } else if (!at_best && sgn(c) > 0 &&
                 Traits::is_zero(x_[j] - lo_[j], tol_.feasibility)) {
        at_best = true;
        best_value = lo_[j];
      }
      if (at_best) {
        // The optimal face of a single-variable objective is x_j = value.
        if (!is_fixed(j)) restrict_to(j, best_value);
        trail.values.push_back(coef * x_[j]);
        if (options.stop_at_fractional &&
            Traits::is_pos(Traits::frac_distance(x_[j]), tol_.integrality)) {
          const Num v = trail.values.back();
          stop_here(k, v);
          return out;
        }
        continue;
      }
    }
    set_objective(obj);
    const LpStatus s = primal_simplex();
    if (s != LpStatus::kOptimal) {
      trail.values.push_back(Num(0));
      lex_pop_stage(trail);
      out.stage_values = trail.values;
      out.status = s;
      return out;
    }
    trail.values.push_back(objective_value());
    // Stay on the optimal face: fix every nonbasic variable (slacks
    // included) whose reduced cost is nonzero.
    for (int v = 0; v < num_vars(); ++v) {
      if (row_of_[v] >= 0 || is_fixed(v) || stale_[v]) continue;
      if (!Traits::is_zero(d_[v], tol_.reduced_cost)) restrict_to(v, x_[v]);
    }
    if (single >= 0 && options.stop_at_fractional &&
        Traits::is_pos(Traits::frac_distance(x_[single]), tol_.integrality)) {
      const Num v = trail.values.back();
      stop_here(k, v);
      return out;
    }
  }
  out.stage_values = trail.values;
  return out;
}

template <class Num>
void Simplex<Num>::load_basis(const std::vector<VarStatus>& statuses) {
  if (static_cast<int>(statuses.size()) != num_vars()) {
    throw std::invalid_argument("load_basis: status vector size mismatch");
  }
  std::vector<int> basic;
  for (int v = 0; v < num_vars(); ++v) {
    if (statuses[v] == VarStatus::kBasic) {
      basic.push_back(v);
    } else {
      at_upper_[v] = statuses[v] == VarStatus::kAtUpper && has_hi_[v];
    }
  }
  rebuild(basic);
}

template <class Num>
std::vector<Num> Simplex<Num>::values() const {
  return std::vector<Num>(x_.begin(), x_.begin() + num_struct_);
}

template <class Num>
Num Simplex<Num>::objective_value() const {
  Num z(0);
  for (int j = 0; j < num_vars(); ++j) {
    if (nonzero(cost_[j])) z += cost_[j] * x_[j];
  }
  return z;
}

template <class Num>
Num Simplex<Num>::reduced_cost(int var) {
  if (row_of_[var] >= 0) return Num(0);
  if (stale_[var]) {
    refresh_column(var);
    mark_stale_if_fixed(var);
  }
  return d_[var];
}

template <class Num>
VarStatus Simplex<Num>::var_status(int var) const {
  if (row_of_[var] >= 0) return VarStatus::kBasic;
  return at_upper_[var] ? VarStatus::kAtUpper : VarStatus::kAtLower;
}

template <class Num>
LpSolution<Num> Simplex<Num>::solution() {
  LpSolution<Num> sol;
  sol.status = status_;
  sol.values = values();
  sol.slack_values.assign(x_.begin() + num_struct_, x_.end());
  for (int j = 0; j < num_struct_; ++j) sol.reduced_costs.push_back(reduced_cost(j));
  for (int r = 0; r < num_rows_; ++r) {
    sol.row_duals.push_back(Num(0) - reduced_cost(num_struct_ + r));
  }
  sol.objective = objective_value();
  for (int v = 0; v < num_vars(); ++v) sol.basis.push_back(var_status(v));
  sol.pivots = pivots_;
  return sol;
}

template class Simplex<double>;
template class Simplex<Rational>;

template <class Num>
LpSolution<Num> solve_primal(const LpProblem& p, const Tolerances& tol) {
  Simplex<Num> lp(p, tol);
  lp.optimize();
  return lp.solution();
}

template <class Num>
LpSolution<Num> reoptimize_dual(const LpProblem& p, const LpSolution<Num>& prior,
                                const Tolerances& tol) {
  Simplex<Num> lp(p, tol);
  lp.load_basis(prior.basis);
  const int64_t before = lp.pivots();
  lp.optimize();
  LpSolution<Num> sol = lp.solution();
  sol.pivots = lp.pivots() - before;
  return sol;
}

template <class Num>
LpSolution<Num> lex_solve(const LpProblem& p, const ObjectiveSequence& objs,
                          const Tolerances& tol) {
  if (objs.empty()) throw std::invalid_argument("lex_solve: empty sequence");
  Simplex<Num> lp(p, tol);
  lp.set_objective(objs.front());
  LexOutcome<Num> out = lp.lex_optimize(objs);
  LpSolution<Num> sol = lp.solution();
  if (out.status != LpStatus::kOptimal) sol.status = out.status;
  sol.stage_values = std::move(out.stage_values);
  return sol;
}

template LpSolution<double> solve_primal(const LpProblem&, const Tolerances&);
template LpSolution<Rational> solve_primal(const LpProblem&, const Tolerances&);
template LpSolution<double> reoptimize_dual(const LpProblem&,
                                            const LpSolution<double>&,
                                            const Tolerances&);
template LpSolution<Rational> reoptimize_dual(const LpProblem&,
                                              const LpSolution<Rational>&,
                                              const Tolerances&);
template LpSolution<double> lex_solve(const LpProblem&, const ObjectiveSequence&,
                                      const Tolerances&);
template LpSolution<Rational> lex_solve(const LpProblem&,
                                        const ObjectiveSequence&,
                                        const Tolerances&);

}  // namespace nqueens
