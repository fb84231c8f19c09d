#include "nqueens/beauty.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nqueens/bnb.hpp"

namespace nqueens {

CellCosts::CellCosts(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::map<int64_t, std::vector<int>, std::greater<>> by_cost;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int64_t a = 2 * i - n - 1;
      const int64_t b = 2 * j - n - 1;
      d_.push_back(a * a + b * b);
      by_cost[d_.back()].push_back(cell_index(n, {i, j}));
    }
  }
  for (auto& [cost, cells] : by_cost) {
    levels_.push_back(cost);
    level_cells_.push_back(std::move(cells));
  }
}

Fingerprint fingerprint(const Permutation& p, const CellCosts& costs) {
  if (p.n() != costs.n()) throw std::invalid_argument("fingerprint: size mismatch");
  Fingerprint f;
  for (int i = 1; i <= p.n(); ++i) f.push_back(costs(i, p[i]));
  std::sort(f.begin(), f.end(), std::greater<>());
  return f;
}

std::strong_ordering fingerprint_compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fingerprint_compare: length mismatch");
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

BnbResult run_bnb(const ModelState& state, const SparseVector& objective,
                  const BeautyOptions& options, const Deadline* deadline) {
  BnbLimits limits;
  limits.deadline = deadline;
  limits.seed = options.seed;
  // Level counts are nonnegative, so an incumbent at 0 is optimal.
  limits.cutoff = Rational(0);
  return options.arithmetic == Arithmetic::kRational
             ? bnb_minimize<Rational>(state, objective, limits, options.tol)
             : bnb_minimize<double>(state, objective, limits, options.tol);
}

bool fix_zero(ModelState& state, const std::vector<int>& cells) {
  const int n = state.n();
  for (int k : cells) {
    if (!state.fix(index_cell(n, k), 0).ok()) return false;
  }
  return true;
}

}  // namespace

SkipResult preprocess_skip(ModelState& state, const CellCosts& costs, int k,
                           int stride, const BeautyOptions& options,
                           const Deadline* deadline) {
  SkipResult result;
  result.next_k = k;
  const int m = static_cast<int>(costs.levels().size());
  const int last = std::min(k + stride, m - 1);
  std::vector<int> cells;
  for (int level = 0; level <= last; ++level) {
    const auto& lc = costs.level_cells(level);
    cells.insert(cells.end(), lc.begin(), lc.end());
  }
  ModelState trial = state;
  if (!fix_zero(trial, cells) || !trial.propagate().ok()) return result;
  const BnbResult r = run_bnb(trial, {}, options, deadline);
  result.nodes = r.nodes;
  if (!r.incumbent) return result;
  state = std::move(trial);
  result.success = true;
  result.next_k = k + stride;
  return result;
}

BeautyReport solve_most_beautiful(int n, const BeautyOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (options.stride < 1) throw std::invalid_argument("stride must be positive");
  const Deadline deadline(options.time_limit);
  BeautyReport report;
  const CellCosts costs(n);
  const int m = static_cast<int>(costs.levels().size());
  report.num_levels = m;
  ModelState state(n);
  auto done = [&] { report.wall_time = deadline.elapsed(); return report; };
  if (!state.propagate().ok()) return done();

  int k = 0;
  if (options.preprocess) {
    while (k < m) {
      ++report.probes;
      const SkipResult skip = preprocess_skip(state, costs, k, options.stride, options, &deadline);
      report.nodes += skip.nodes;
      if (!skip.success) break;
      report.levels_skipped = std::min(skip.next_k + 1, m);
      k = skip.next_k;
    }
    // The probe includes level k itself, so it is already zero.
    k = std::min(std::max(k, report.levels_skipped), m);
  }

  std::optional<Permutation> witness;
  int pinned = 0;
  for (; k < m; ++k) {
    if (deadline.expired()) {
      report.status = SolveStatus::kTimeout;
      return done();
    }
    if (options.early_exit && pinned == n) break;
    const auto& cells = costs.level_cells(k);
    if (std::none_of(cells.begin(), cells.end(), [&](int c) { return state.is_free(c); })) {
      // Nothing left to decide here unless a queen is already fixed on it.
      const int fixed = static_cast<int>(std::count_if(cells.begin(), cells.end(), [&](int c) {
        return state.state(c) == CellState::kOne;
      }));
      pinned += fixed;
      if (fixed > 0) report.levels.push_back({costs.levels()[k], fixed});
      continue;
    }
    SparseVector objective;
    for (int c : cells) objective.emplace_back(c, Rational(1));
    const BnbResult r = run_bnb(state, objective, options, &deadline);
    report.nodes += r.nodes;
    report.lp_pivots += r.lp_pivots;
    if (r.status == BnbStatus::kTimeout) {
      report.status = SolveStatus::kTimeout;
      return done();
    }
    if (r.status != BnbStatus::kOptimal) return done();
    const int z = static_cast<int>(r.incumbent_value->get_num().get_si());
    witness = r.incumbent;
    report.levels.push_back({costs.levels()[k], z});
    if (z == 0) {
      if (!fix_zero(state, cells)) return done();
    } else {
      LinearEquality row;
      for (int c : cells) row.terms.push_back({index_cell(n, c), 1});
      row.rhs = z;
      state.add_row(std::move(row));
      pinned += z;
    }
  }
  if (!witness) {
    // Every level was decided by probes and propagation alone.
    const BnbResult r = run_bnb(state, {}, options, &deadline);
    report.nodes += r.nodes;
    if (!r.incumbent) return done();
    witness = r.incumbent;
  }
  if (options.canonical_witness) {
    SolveOptions lex;
    lex.method = Method::kLexDfs;
    if (options.time_limit) lex.time_limit = std::max(0.0, *options.time_limit - deadline.elapsed());
    const SolveReport canon = solve_lex_dfs_from(state, lex);
    if (canon.status == SolveStatus::kTimeout) {
      report.status = SolveStatus::kTimeout;
      return done();
    }
    if (canon.solution) witness = canon.solution;
  }
  report.status = SolveStatus::kOptimal;
  report.solution = witness;
  report.fingerprint = fingerprint(*witness, costs);
  return done();
}

}  // namespace nqueens
