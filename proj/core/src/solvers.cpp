#include "nqueens/solvers.hpp"

#include <stdexcept>

#include "nqueens/cuts.hpp"
#include "nqueens/model_lp.hpp"

namespace nqueens {

std::string to_string(Method m) {
  switch (m) {
    case Method::kCp:
      return "cp";
    case Method::kIlpIter:
      return "ilp-iter";
    case Method::kIlpTrunc:
      return "ilp-trunc";
    case Method::kLexDfs:
      return "lex-dfs";
    case Method::kLexCut:
      return "lex-cut";
    case Method::kBigintOracle:
      return "bigint-oracle";
  }
  return "unknown";
}

Method parse_method(const std::string& s) {
  for (Method m : {Method::kCp, Method::kIlpIter, Method::kIlpTrunc, Method::kLexDfs,
                   Method::kLexCut, Method::kBigintOracle}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown method: " + s);
}

Arithmetic default_arithmetic(Method m) {
  switch (m) {
    case Method::kLexDfs:
    case Method::kLexCut:
    case Method::kBigintOracle:
      return Arithmetic::kRational;
    default:
      return Arithmetic::kFloat;
  }
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kTimeout:
      return "timeout";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

SparseVector bigint_objective(int n) {
  SparseVector obj;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      mpz_class w;
      mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(n * (n - i) + j));
      obj.emplace_back(cell_index(n, {i, j}), Rational(w));
    }
  }
  return obj;
}

namespace {

void accumulate(SolveReport& report, const BnbResult& r) {
  report.nodes += r.nodes;
  report.lp_pivots += r.lp_pivots;
  for (int k = 0; k < kNumCutKinds; ++k) report.cuts_added[k] += r.cuts_added[k];
}

SolveReport start(Method m, int n, const SolveOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  SolveReport report;
  report.method = m;
  report.n = n;
  report.arithmetic = options.arithmetic.value_or(default_arithmetic(m));
  return report;
}

void finish_found(SolveReport& report, const Permutation& p) {
  if (!is_feasible(p)) throw std::logic_error("solver produced an attacked placement");
  report.status = SolveStatus::kOptimal;
  report.solution = p;
}

BnbLimits limits_for(const SolveOptions& options, const Deadline& deadline,
                     std::optional<int64_t> node_limit) {
  BnbLimits limits;
  limits.node_limit = node_limit;
  limits.deadline = &deadline;
  limits.seed = options.seed;
  return limits;
}

template <class Num>
void ilp_iter(int n, const SolveOptions& options, const Deadline& deadline,
              SolveReport& report) {
  ModelState state(n);
  if (!state.propagate().ok()) return;
  const BnbLimits limits = limits_for(options, deadline, std::nullopt);
  auto timeout = [&] {
    report.status = SolveStatus::kTimeout;
    report.partial_prefix = state.fixed_prefix();
  };
  if (options.positionwise) {
    for (int k = 0; k < n * n; ++k) {
      if (!state.is_free(k)) continue;
      const BnbResult r =
          bnb_minimize<Num>(state, {{k, Rational(-1)}}, limits, options.tol);
      accumulate(report, r);
      if (r.status == BnbStatus::kTimeout) return timeout();
      if (r.status == BnbStatus::kInfeasible) return;
      const int value = *r.incumbent_value < 0 ? 1 : 0;
      if (!state.fix(index_cell(n, k), value).ok()) {
        throw std::logic_error("optimal fixing turned infeasible");
      }
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      if (state.fixed_column(i)) continue;
      const BnbResult r = bnb_minimize<Num>(state, row_objective(n, i), limits, options.tol);
      accumulate(report, r);
      if (r.status == BnbStatus::kTimeout) return timeout();
      if (r.status == BnbStatus::kInfeasible) return;
      const int col = (*r.incumbent)[i];
      if (!state.fix({i, col}, 1).ok()) {
        throw std::logic_error("optimal fixing turned infeasible");
      }
    }
  }
  finish_found(report, *state.placement());
}

template <class Num>
void ilp_trunc(int n, const SolveOptions& options, const SolveHooks& hooks,
               const Deadline& deadline, SolveReport& report) {
  ModelState state(n);
  if (!state.propagate().ok()) return;
  const BnbLimits limits = limits_for(options, deadline, options.node_limit);
  std::vector<ModelState> before(n + 1, state);
  std::vector<int> chosen(n + 1, 0);
  auto discard = [&](int row, int value) {
    if (!hooks.on_discard) return;
    std::vector<int> prefix(chosen.begin() + 1, chosen.begin() + row);
    prefix.push_back(value);
    hooks.on_discard(prefix);
  };

  int i = 1;
  bool entering = true;
  while (i <= n) {
    if (deadline.expired()) {
      report.status = SolveStatus::kTimeout;
      report.partial_prefix = state.fixed_prefix();
      return;
    }
    if (entering) before[i] = state;
    entering = true;
    if (auto col = state.fixed_column(i)) {
      // Decided by propagation.
      chosen[i] = *col;
      ++i;
      continue;
    }
    bool backtrack = state.infeasible();
    if (!backtrack) {
      const BnbResult r = bnb_minimize<Num>(state, row_objective(n, i), limits, options.tol);
      accumulate(report, r);
      if (r.status == BnbStatus::kTimeout) {
        report.status = SolveStatus::kTimeout;
        report.partial_prefix = state.fixed_prefix();
        return;
      }
      if (r.status == BnbStatus::kInfeasible) {
        backtrack = true;
      } else {
        const Rational& lb = *r.lower_bound;
        const int bar = lb > n ? n + 1 : static_cast<int>(lb.get_num().get_si());
        ModelState trial = state;
        if (bar > n) {
          backtrack = true;
        } else if (trial.fix({i, bar}, 1).ok()) {
          chosen[i] = bar;
          state = std::move(trial);
          ++i;
          continue;
        }
        if (!backtrack) {
          // Every value up to bar is out; retry the row with them forbidden.
          discard(i, bar);
          state.forbid_prefix(i, bar);
          entering = false;
          continue;
        }
      }
    }
    // Row i has no value left: undo row i - 1 and push it past its value.
    while (true) {
      --i;
      if (i < 1) return;
      // Rows decided by propagation are undone together with their cause.
      if (before[i].fixed_column(i)) continue;
      ++report.backtracks;
      state = before[i];
      discard(i, chosen[i]);
      state.forbid_prefix(i, chosen[i]);
      if (!state.infeasible()) break;
    }
    entering = false;
  }
  finish_found(report, *state.placement());
}

template <class Num>
void lex_dfs(ModelState root, const SolveOptions& options, const Deadline& deadline,
             SolveReport& report) {
  const int n = root.n();
  if (!root.propagate().ok()) return;
  ModelLp<Num> lp(root, options.tol);
  lp.engine().set_deadline(&deadline);
  std::vector<ModelState> stack{root};
  auto timeout = [&](const ModelState& at) {
    report.status = SolveStatus::kTimeout;
    report.partial_prefix = at.fixed_prefix();
    report.lp_pivots = lp.engine().pivots();
  };
  while (!stack.empty()) {
    ModelState state = std::move(stack.back());
    stack.pop_back();
    if (deadline.expired()) return timeout(state);
    ++report.nodes;

    if (options.cuts_enabled) {
      if (auto row = state.first_free_row()) {
        lp.sync_bounds(state);
        lp.engine().set_objective(row_objective(n, *row));
        for (int round = 0; round < 5; ++round) {
          if (lp.solve() != LpStatus::kOptimal || lp.is_integral()) break;
          const std::vector<Num> x = lp.point();
          std::vector<Cut> cuts = separate_cliques(state, x, options.tol);
          std::vector<Cut> odd = separate_odd_cycles(state, x, options.tol);
          cuts.insert(cuts.end(), odd.begin(), odd.end());
          if (cuts.empty()) break;
          for (const Cut& c : cuts) {
            lp.add_cut(c);
            ++report.cuts_added[static_cast<int>(c.kind)];
          }
        }
      }
    }

    bool pruned = false;
    while (!pruned) {
      const std::optional<int> row = state.first_free_row();
      if (!row) {
        const std::optional<Permutation> p = state.placement();
        if (p && is_feasible(*p) && satisfies(state, *p)) {
          report.lp_pivots = lp.engine().pivots();
          return finish_found(report, *p);
        }
        pruned = true;
        break;
      }
      const RowStepResult step = row_lex_step(state, lp, *row);
      switch (step.status) {
        case RowStepStatus::kRowFixed:
          continue;
        case RowStepStatus::kInfeasible:
          pruned = true;
          break;
        case RowStepStatus::kLimit:
          return timeout(state);
        case RowStepStatus::kFound: {
          std::vector<int> cols(n, 0);
          for (int k = 0; k < n * n; ++k) {
            if (lp.is_one(k)) cols[k / n] = k % n + 1;
          }
          report.lp_pivots = lp.engine().pivots();
          return finish_found(report, Permutation(cols));
        }
        case RowStepStatus::kBranch: {
          std::vector<ModelState> children;
          for (int j = 1; j <= n; ++j) {
            if (!state.is_free(cell_index(n, {*row, j}))) continue;
            ModelState child = state;
            if (child.fix({*row, j}, 1).ok()) children.push_back(std::move(child));
          }
          for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack.push_back(std::move(*it));
          }
          break;
        }
      }
      if (step.status == RowStepStatus::kBranch) break;
    }
    if (pruned) ++report.backtracks;
  }
  report.lp_pivots = lp.engine().pivots();
}

// Every nogood stays in the model for the whole run. Only the ones that
// bind are loaded in the tableau: a nogood whose slack is basic and positive
// is unloaded, and reloaded as soon as a lex point violates it. A lex point is
// reported only once it satisfies the whole pool, so the sequence is the same
// as with every row loaded.
template <class Num>
void lex_cut(int n, const SolveOptions& options, const SolveHooks& hooks,
             const Deadline& deadline, SolveReport& report) {
  using Traits = NumTraits<Num>;
  ModelState root(n);
  if (!root.propagate().ok()) return;
  ModelLp<Num> lp(root, options.tol);
  Simplex<Num>& engine = lp.engine();
  engine.set_deadline(&deadline);
  const ObjectiveSequence objs = lex_max_sequence(root);
  LexOptions lex;
  lex.stop_at_fractional = true;
  // Stages before the first fractional cell stay fixed across rounds.
  LexTrail<Num> trail;
  std::vector<Cut> pool;
  std::vector<int> loaded_row;  // LP row of each pool cut, -1 when unloaded
  std::vector<Num> x;
  auto load = [&](std::size_t c) {
    loaded_row[c] = lp.add_cut(pool[c]);
  };
  auto unload_slack_rows = [&] {
    std::vector<int> rows;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      const int r = loaded_row[c];
      if (r < 0) continue;
      const int s = engine.slack_of(r);
      if (engine.var_status(s) == VarStatus::kBasic &&
          Traits::is_pos(engine.value(s), options.tol.feasibility)) {
        rows.push_back(r);
      }
    }
    if (rows.empty()) return;
    const std::vector<int> var_map = engine.remove_rows(rows);
    trail.remap(var_map);
    for (int& r : loaded_row) {
      if (r < 0) continue;
      const int s = var_map[engine.num_cols() + r];
      r = s < 0 ? -1 : s - engine.num_cols();
    }
  };
  bool stopped_early = true;
  while (!deadline.expired()) {
    const LexOutcome<Num> out = engine.lex_resume(objs, lex, trail);
    report.lp_pivots = engine.pivots();
    if (out.status == LpStatus::kInfeasible) {
      stopped_early = false;
      break;
    }
    if (out.status != LpStatus::kOptimal) break;
    x = lp.point();
    bool reloaded = false;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (loaded_row[c] < 0 &&
          Traits::is_pos(cut_violation(n, pool[c], x), options.tol.separation)) {
        load(c);
        reloaded = true;
      }
    }
    if (reloaded) continue;
    ++report.nodes;
    std::optional<int> stopped;
    if (out.stopped_at) stopped = objs[*out.stopped_at].front().first;
    if (hooks.on_lex_point) {
      std::vector<Rational> q;
      for (const Num& v : x) q.push_back(Traits::to_rational(v));
      hooks.on_lex_point(q, stopped);
    }
    const std::optional<Cut> cut = make_lex_nogood(n, x, options.tol);
    if (!cut) {
      std::vector<int> cols(n, 0);
      for (int k = 0; k < n * n; ++k) {
        if (lp.is_one(k)) cols[k / n] = k % n + 1;
      }
      return finish_found(report, Permutation(cols));
    }
    unload_slack_rows();
    pool.push_back(*cut);
    loaded_row.push_back(-1);
    load(pool.size() - 1);
    ++report.cuts_added[static_cast<int>(CutKind::kLexNogood)];
  }
  if (!stopped_early) return;
  report.status = SolveStatus::kTimeout;
  // Rows whose queen precedes the first fractional cell of the last point.
  for (int i = 0; i < n && !x.empty(); ++i) {
    int col = 0;
    bool clean = true;
    for (int j = 0; j < n; ++j) {
      const Num& v = x[i * n + j];
      if (Traits::is_pos(Traits::frac_distance(v), options.tol.integrality)) {
        clean = false;
        break;
      }
      if (Traits::is_zero(v - Num(1), options.tol.integrality)) col = j + 1;
    }
    if (!clean || col == 0) break;
    report.partial_prefix.push_back(col);
  }
}

template <class Num>
void bigint_oracle(int n, const SolveOptions& options, const Deadline& deadline,
                   SolveReport& report) {
  ModelState state(n);
  const BnbResult r = bnb_minimize<Num>(state, bigint_objective(n),
                                        limits_for(options, deadline, std::nullopt),
                                        options.tol);
  accumulate(report, r);
  if (r.status == BnbStatus::kTimeout) {
    report.status = SolveStatus::kTimeout;
    return;
  }
  if (r.status == BnbStatus::kOptimal) finish_found(report, *r.incumbent);
}

}  // namespace

SolveReport solve_ilp_iter(int n, const SolveOptions& options) {
  SolveReport report = start(Method::kIlpIter, n, options);
  Deadline deadline(options.time_limit);
  if (report.arithmetic == Arithmetic::kRational) {
    ilp_iter<Rational>(n, options, deadline, report);
  } else {
    ilp_iter<double>(n, options, deadline, report);
  }
  report.wall_time = deadline.elapsed();
  return report;
}

SolveReport solve_ilp_trunc(int n, const SolveOptions& options, const SolveHooks& hooks) {
  if (options.node_limit < 0) throw std::invalid_argument("node limit must be >= 0");
  SolveReport report = start(Method::kIlpTrunc, n, options);
  Deadline deadline(options.time_limit);
  if (report.arithmetic == Arithmetic::kRational) {
    ilp_trunc<Rational>(n, options, hooks, deadline, report);
  } else {
    ilp_trunc<double>(n, options, hooks, deadline, report);
  }
  report.wall_time = deadline.elapsed();
  return report;
}

SolveReport solve_lex_dfs_from(const ModelState& root, const SolveOptions& options) {
  SolveReport report = start(Method::kLexDfs, root.n(), options);
  Deadline deadline(options.time_limit);
  if (report.arithmetic == Arithmetic::kRational) {
    lex_dfs<Rational>(root, options, deadline, report);
  } else {
    lex_dfs<double>(root, options, deadline, report);
  }
  report.wall_time = deadline.elapsed();
  return report;
}

SolveReport solve_lex_dfs(int n, const SolveOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return solve_lex_dfs_from(ModelState(n), options);
}

SolveReport solve_lex_cut(int n, const SolveOptions& options, const SolveHooks& hooks) {
  SolveReport report = start(Method::kLexCut, n, options);
  Deadline deadline(options.time_limit);
  if (report.arithmetic == Arithmetic::kRational) {
    lex_cut<Rational>(n, options, hooks, deadline, report);
  } else {
    lex_cut<double>(n, options, hooks, deadline, report);
  }
  report.wall_time = deadline.elapsed();
  return report;
}

SolveReport solve_bigint_oracle(int n, const SolveOptions& options) {
  if (n < 4 || n > kBigintMaxN) {
    throw std::invalid_argument("bigint-oracle supports 4 <= n <= " +
                                std::to_string(kBigintMaxN));
  }
  SolveReport report = start(Method::kBigintOracle, n, options);
  // The coefficients span more bits than a double holds.
  report.arithmetic = Arithmetic::kRational;
  Deadline deadline(options.time_limit);
  bigint_oracle<Rational>(n, options, deadline, report);
  report.wall_time = deadline.elapsed();
  return report;
}

SolveReport solve(int n, const SolveOptions& options, const SolveHooks& hooks) {
  switch (options.method) {
    case Method::kCp:
      return solve_cp(n, options);
    case Method::kIlpIter:
      return solve_ilp_iter(n, options);
    case Method::kIlpTrunc:
      return solve_ilp_trunc(n, options, hooks);
    case Method::kLexDfs:
      return solve_lex_dfs(n, options);
    case Method::kLexCut:
      return solve_lex_cut(n, options, hooks);
    case Method::kBigintOracle:
      return solve_bigint_oracle(n, options);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace nqueens
