#include "nqueens/bnb.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "nqueens/cuts.hpp"
#include "nqueens/model_lp.hpp"

namespace nqueens {

std::string to_string(BnbStatus s) {
  switch (s) {
    case BnbStatus::kOptimal:
      return "optimal";
    case BnbStatus::kInfeasible:
      return "infeasible";
    case BnbStatus::kTruncated:
      return "truncated";
    case BnbStatus::kTimeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

struct Node {
  ModelState state;
  Rational bound;
};

Rational objective_at(int n, const SparseVector& objective, const Permutation& p) {
  Rational z(0);
  for (const auto& [k, c] : objective) {
    const Cell cell = index_cell(n, k);
    if (p[cell.row] == cell.col) z += c;
  }
  return z;
}

}  // namespace

template <class Num>
BnbResult bnb_minimize(const ModelState& state, const SparseVector& objective,
                       const BnbLimits& limits, const Tolerances& tol) {
  using Traits = NumTraits<Num>;
  const int n = state.n();
  BnbResult result;
  const bool integral_objective =
      std::all_of(objective.begin(), objective.end(),
                  [](const auto& t) { return t.second.get_den() == 1; });
  auto round_bound = [&](const Num& z) -> Rational {
    if (integral_objective) return ceil_bound(z, tol.feasibility);
    return Traits::to_rational(z);
  };

  ModelState root = state;
  if (!root.propagate().ok()) return result;
  ModelLp<Num> lp(root, tol);
  lp.engine().set_deadline(limits.deadline);
  lp.engine().set_objective(objective);

  std::mt19937_64 rng(limits.seed);
  std::vector<Node> stack;
  stack.push_back({root, Rational(0)});
  bool first = true;
  bool have_root_bound = false;
  int64_t processed = 0;
  bool timed_out = false;
  bool truncated = false;

  auto prunable = [&](const Rational& bound) {
    return result.incumbent_value && bound >= *result.incumbent_value;
  };

  while (!stack.empty()) {
    if (limits.deadline && limits.deadline->expired()) {
      timed_out = true;
      break;
    }
    if (limits.node_limit && processed > *limits.node_limit) {
      truncated = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    if (!first && prunable(node.bound)) continue;
    ++processed;
    ++result.nodes;

    if (!first) lp.sync_bounds(node.state);
    LpStatus s = lp.solve();
    if (s == LpStatus::kTimeLimit || s == LpStatus::kIterationLimit) {
      stack.push_back(std::move(node));
      timed_out = true;
      break;
    }
    if (s != LpStatus::kOptimal) {
      first = false;
      continue;
    }
    if (first && limits.root_cuts) {
      for (int round = 0; round < limits.max_cut_rounds; ++round) {
        if (lp.is_integral()) break;
        const std::vector<Num> x = lp.point();
        std::vector<Cut> cuts = separate_cliques(node.state, x, tol);
        std::vector<Cut> odd = separate_odd_cycles(node.state, x, tol);
        cuts.insert(cuts.end(), odd.begin(), odd.end());
        if (cuts.empty()) break;
        for (const Cut& c : cuts) {
          lp.add_cut(c);
          ++result.cuts_added[static_cast<int>(c.kind)];
        }
        s = lp.solve();
        if (s != LpStatus::kOptimal) break;
      }
      if (s == LpStatus::kTimeLimit || s == LpStatus::kIterationLimit) {
        stack.push_back(std::move(node));
        timed_out = true;
        break;
      }
      if (s != LpStatus::kOptimal) {
        first = false;
        continue;
      }
    }
    const Rational bound = round_bound(lp.engine().objective_value());
    if (first) {
      have_root_bound = true;
      result.lower_bound = bound;
    }
    first = false;
    if (prunable(bound)) continue;

    if (lp.is_integral()) {
      std::vector<int> cols(n, 0);
      for (int k = 0; k < n * n; ++k) {
        if (lp.is_one(k)) cols[k / n] = k % n + 1;
      }
      Permutation p(cols);
      const Rational z = objective_at(n, objective, p);
      if (!result.incumbent_value || z < *result.incumbent_value) {
        result.incumbent = p;
        result.incumbent_value = z;
      }
      if (limits.cutoff && z <= *limits.cutoff) {
        stack.clear();
        break;
      }
      continue;
    }

    // Most fractional free cell.
    std::vector<int> ties;
    Num best(0);
    for (int k = 0; k < n * n; ++k) {
      if (!node.state.is_free(k)) continue;
      const Num f = Traits::frac_distance(lp.value(k));
      if (!Traits::is_pos(f, tol.integrality)) continue;
      if (ties.empty() || f > best) {
        ties.assign(1, k);
        best = f;
      } else if (f == best) {
        ties.push_back(k);
      }
    }
    if (ties.empty()) continue;  // fractional only on fixed cells: cannot happen
    int k = ties.front();
    if (limits.seed != 0 && ties.size() > 1) {
      k = ties[std::uniform_int_distribution<size_t>(0, ties.size() - 1)(rng)];
    }
    const Cell cell = index_cell(n, k);
    for (int value : {0, 1}) {
      Node child{node.state, bound};
      if (child.state.fix(cell, value).ok()) stack.push_back(std::move(child));
    }
  }

  result.lp_pivots = lp.engine().pivots();
  if (timed_out || truncated) {
    std::optional<Rational> lb = result.incumbent_value;
    for (const Node& node : stack) {
      if (!lb || node.bound < *lb) lb = node.bound;
    }
    if (!have_root_bound) lb = stack.empty() ? lb : std::optional<Rational>();
    result.lower_bound = lb;
    result.status = timed_out ? BnbStatus::kTimeout : BnbStatus::kTruncated;
    if (stack.empty() && result.incumbent) result.status = BnbStatus::kOptimal;
    return result;
  }
  if (result.incumbent) {
    result.status = BnbStatus::kOptimal;
    result.lower_bound = result.incumbent_value;
  } else {
    result.status = BnbStatus::kInfeasible;
    result.lower_bound.reset();
  }
  return result;
}

template BnbResult bnb_minimize<double>(const ModelState&, const SparseVector&,
                                        const BnbLimits&, const Tolerances&);
template BnbResult bnb_minimize<Rational>(const ModelState&, const SparseVector&,
                                          const BnbLimits&, const Tolerances&);

}  // namespace nqueens
