#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

using nqueens::Rational;

bool pairwise_ok(const std::vector<int>& cols) {
  const int n = static_cast<int>(cols.size());
  for (int a = 0; a < n; ++a) {
    if (cols[a] < 1 || cols[a] > n) return false;
    for (int b = a + 1; b < n; ++b) {
      if (conflict(a + 1, cols[a], b + 1, cols[b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> completions(int n, const std::vector<int>& prefix,
                                          std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> cols = prefix;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    if (cols[a] < 1 || cols[a] > n) return out;
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      if (conflict(a + 1, cols[a], b + 1, cols[b])) return out;
    }
  }
  std::function<void()> rec = [&] {
    if (out.size() >= limit) return;
    const int row = static_cast<int>(cols.size()) + 1;
    if (row > n) {
      out.push_back(cols);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool ok = true;
      for (int r = 1; r < row && ok; ++r) ok = !conflict(r, cols[r - 1], row, c);
      if (!ok) continue;
      cols.push_back(c);
      rec();
      cols.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<std::vector<int>> all_solutions(int n) { return completions(n, {}); }

std::vector<int> greedy_sequence(int len) {
  std::vector<std::pair<int, int>> queens;
  std::vector<int> col_of(len + 1, 0);
  int missing = len;
  for (int d = 2; missing > 0; ++d) {
    for (int r = 1; r < d; ++r) {
      const int c = d - r;
      bool free = true;
      for (auto [qr, qc] : queens) free = free && !conflict(qr, qc, r, c);
      if (free) {
        queens.push_back({r, c});
        if (r <= len && col_of[r] == 0) {
          col_of[r] = c;
          --missing;
        }
        break;
      }
    }
  }
  return std::vector<int>(col_of.begin() + 1, col_of.end());
}

std::vector<int64_t> fingerprint_of(int n, const std::vector<int>& cols) {
  std::vector<int64_t> f;
  for (int i = 1; i <= n; ++i) f.push_back(cost(n, i, cols[i - 1]));
  std::sort(f.rbegin(), f.rend());
  return f;
}

std::optional<std::vector<int64_t>> min_fingerprint(int n) {
  std::optional<std::vector<int64_t>> best;
  for (const auto& s : all_solutions(n)) {
    auto f = fingerprint_of(n, s);
    if (!best || f < *best) best = f;
  }
  return best;
}

Rational evaluate(const nqueens::SparseVector& objective, const std::vector<Rational>& x) {
  Rational z(0);
  for (const auto& [j, c] : objective) z += c * x[j];
  return z;
}

std::string certify_optimal(const nqueens::LpProblem& p, const nqueens::SparseVector& objective,
                            const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(x.size()) != p.num_cols) return "wrong primal size";
  if (static_cast<int>(y.size()) != m) return "wrong dual size";
  for (int j = 0; j < p.num_cols; ++j) {
    if (x[j] < p.lower[j] || x[j] > p.upper[j]) return "bound violated at column " + std::to_string(j);
  }
  std::vector<Rational> d(p.num_cols, Rational(0));
  for (const auto& [j, c] : objective) d[j] += c;
  for (int r = 0; r < m; ++r) {
    const auto& row = p.rows[r];
    Rational lhs(0);
    for (const auto& [j, a] : row.terms) {
      lhs += a * x[j];
      d[j] -= y[r] * a;
    }
    if (row.sense == nqueens::RowSense::kEqual) {
      if (lhs != row.rhs) return "equality row " + std::to_string(r) + " violated";
    } else {
      if (lhs > row.rhs) return "row " + std::to_string(r) + " violated";
      if (y[r] > 0) return "wrong dual sign on row " + std::to_string(r);
      if (y[r] != 0 && lhs != row.rhs) return "slack row " + std::to_string(r) + " has a dual";
    }
  }
  for (int j = 0; j < p.num_cols; ++j) {
    const bool at_lo = x[j] == p.lower[j];
    const bool at_hi = x[j] == p.upper[j];
    if (d[j] > 0 && !at_lo) return "positive reduced cost off the lower bound, column " + std::to_string(j);
    if (d[j] < 0 && !at_hi) return "negative reduced cost off the upper bound, column " + std::to_string(j);
  }
  return "";
}

}  // namespace oracle
