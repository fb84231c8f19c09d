// Lex-first placement by depth-first search on pi_1, pi_2, ... with values
// tried in increasing order, filtered by the three alldifferent constraints
// on pi_i, pi_i + i and pi_i - i.
#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "nqueens/solvers.hpp"

namespace nqueens {

namespace {

class CpSearch {
 public:
  CpSearch(int n, const SolveOptions& options, const Deadline& deadline)
      : n_(n), matching_(options.matching_filter), deadline_(deadline) {}

  SolveReport run() {
    SolveReport report;
    Domains d(n_, std::vector<char>(n_, 1));
    std::vector<int> size(n_, n_);
    std::vector<int> queue;
    for (int r = 0; r < n_; ++r) {
      if (size[r] == 1) queue.push_back(r);
    }
    std::vector<char> done(n_, 0);
    if (filter(d, size, done, queue)) dfs(d, size, done);
    report.nodes = nodes_;
    report.backtracks = failures_;
    if (found_) {
      report.status = SolveStatus::kOptimal;
      report.solution = Permutation(solution_);
    } else if (timed_out_) {
      report.status = SolveStatus::kTimeout;
      report.partial_prefix = prefix_at_timeout_;
    } else {
      report.status = SolveStatus::kInfeasible;
    }
    return report;
  }

 private:
  using Domains = std::vector<std::vector<char>>;

  bool remove(Domains& d, std::vector<int>& size, int row, int col,
              std::vector<int>& queue) {
    if (col < 0 || col >= n_ || !d[row][col]) return true;
    d[row][col] = 0;
    if (--size[row] == 0) return false;
    if (size[row] == 1) queue.push_back(row);
    return true;
  }

  int only_value(const std::vector<char>& dom) const {
    for (int c = 0; c < n_; ++c) {
      if (dom[c]) return c;
    }
    return -1;
  }

  // Forward checking from every newly decided row.
  bool forward(Domains& d, std::vector<int>& size, std::vector<char>& done,
               std::vector<int>& queue) {
    while (!queue.empty()) {
      const int r = queue.back();
      queue.pop_back();
      if (done[r]) continue;
      done[r] = 1;
      const int c = only_value(d[r]);
      for (int k = 0; k < n_; ++k) {
        if (k == r) continue;
        if (!remove(d, size, k, c, queue) || !remove(d, size, k, c + r - k, queue) ||
            !remove(d, size, k, c - r + k, queue)) {
          return false;
        }
      }
    }
    return true;
  }

  // Regin's filtering for alldifferent over value(row, col) = col + shift*row.
  bool regin(Domains& d, std::vector<int>& size, int shift, std::vector<int>& queue,
             bool& changed) {
    const int offset = shift < 0 ? n_ - 1 : 0;
    const int num_values = 2 * n_;
    auto value_of = [&](int row, int col) { return col + shift * row + offset; };
    auto col_of = [&](int row, int value) { return value - offset - shift * row; };

    std::vector<int> match_var(n_, -1), match_val(num_values, -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int r) -> bool {
      for (int c = 0; c < n_; ++c) {
        if (!d[r][c]) continue;
        const int v = value_of(r, c);
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_val[v] < 0 || augment(match_val[v])) {
          match_var[r] = v;
          match_val[v] = r;
          return true;
        }
      }
      return false;
    };
    for (int r = 0; r < n_; ++r) {
      seen.assign(num_values, 0);
      if (!augment(r)) return false;
    }

    // Nodes: rows 0..n-1, values n..n+num_values-1. Matched edges run
    // row -> value, the others value -> row.
    const int total = n_ + num_values;
    std::vector<std::vector<int>> out(total);
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        if (!d[r][c]) continue;
        const int v = value_of(r, c);
        if (match_var[r] == v) {
          out[r].push_back(n_ + v);
        } else {
          out[n_ + v].push_back(r);
        }
      }
    }
    // Values reachable from an unmatched value.
    std::vector<char> reach(total, 0);
    std::vector<int> stack;
    for (int v = 0; v < num_values; ++v) {
      if (match_val[v] < 0) {
        reach[n_ + v] = 1;
        stack.push_back(n_ + v);
      }
    }
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : out[u]) {
        if (!reach[w]) {
          reach[w] = 1;
          stack.push_back(w);
        }
      }
    }
    // Tarjan's strongly connected components.
    std::vector<int> index(total, -1), low(total, 0), comp(total, -1), tstack;
    std::vector<char> on(total, 0);
    int counter = 0, ncomp = 0;
    std::function<void(int)> strong = [&](int u) {
      index[u] = low[u] = counter++;
      tstack.push_back(u);
      on[u] = 1;
      for (int w : out[u]) {
        if (index[w] < 0) {
          strong(w);
          low[u] = std::min(low[u], low[w]);
        } else if (on[w]) {
          low[u] = std::min(low[u], index[w]);
        }
      }
      if (low[u] == index[u]) {
        int w;
        do {
          w = tstack.back();
          tstack.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
        } while (w != u);
        ++ncomp;
      }
    };
    for (int u = 0; u < total; ++u) {
      if (index[u] < 0) strong(u);
    }
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        if (!d[r][c]) continue;
        const int v = value_of(r, c);
        if (match_var[r] == v || reach[n_ + v] || comp[r] == comp[n_ + v]) continue;
        changed = true;
        if (!remove(d, size, r, col_of(r, v), queue)) return false;
      }
    }
    return true;
  }

  bool filter(Domains& d, std::vector<int>& size, std::vector<char>& done,
              std::vector<int>& queue) {
    while (true) {
      if (!forward(d, size, done, queue)) return false;
      if (!matching_) return true;
      bool changed = false;
      for (int shift : {0, 1, -1}) {
        if (!regin(d, size, shift, queue, changed)) return false;
      }
      if (!changed) return true;
    }
  }

  bool dfs(const Domains& d, const std::vector<int>& size,
           const std::vector<char>& done) {
    int row = -1;
    for (int r = 0; r < n_; ++r) {
      if (size[r] > 1) {
        row = r;
        break;
      }
    }
    if (row < 0) {
      found_ = true;
      solution_.resize(n_);
      for (int r = 0; r < n_; ++r) solution_[r] = only_value(d[r]) + 1;
      return true;
    }
    for (int c = 0; c < n_; ++c) {
      if (!d[row][c]) continue;
      if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
        timed_out_ = true;
        for (int r = 0; r < row; ++r) prefix_at_timeout_.push_back(only_value(d[r]) + 1);
        return true;
      }
      Domains child = d;
      std::vector<int> child_size = size;
      std::vector<char> child_done = done;
      std::fill(child[row].begin(), child[row].end(), 0);
      child[row][c] = 1;
      child_size[row] = 1;
      std::vector<int> queue{row};
      if (filter(child, child_size, child_done, queue)) {
        if (dfs(child, child_size, child_done)) return true;
      } else {
        ++failures_;
      }
    }
    return false;
  }

  int n_;
  bool matching_;
  const Deadline& deadline_;
  int64_t nodes_ = 0;
  int64_t failures_ = 0;
  bool found_ = false;
  bool timed_out_ = false;
  std::vector<int> solution_;
  std::vector<int> prefix_at_timeout_;
};

}  // namespace

SolveReport solve_cp(int n, const SolveOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Deadline deadline(options.time_limit);
  SolveReport report = CpSearch(n, options, deadline).run();
  report.method = Method::kCp;
  report.n = n;
  report.arithmetic = options.arithmetic.value_or(default_arithmetic(Method::kCp));
  report.wall_time = deadline.elapsed();
  return report;
}

}  // namespace nqueens
