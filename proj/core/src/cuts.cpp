#include "nqueens/cuts.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace nqueens {

namespace {

bool on_board(int n, int r, int c) { return r >= 1 && r <= n && c >= 1 && c <= n; }

std::vector<int> sorted_cells(int n, const Cut& cut) {
  std::vector<int> cells;
  for (const CutTerm& t : cut.terms) cells.push_back(cell_index(n, t.cell));
  std::sort(cells.begin(), cells.end());
  return cells;
}

template <class Num>
void check_size(int n, const std::vector<Num>& x) {
  if (static_cast<int>(x.size()) != n * n) {
    throw std::invalid_argument("point must have one value per cell");
  }
}

}  // namespace

std::vector<CutTerm> clique_members(int n, CutKind kind, int i, int j, int h) {
  std::vector<std::pair<int, int>> offsets;
  switch (kind) {
    case CutKind::kCliquePlus:
      offsets = {{0, 0}, {0, h}, {h, 0}, {-h, 0}, {0, -h}};
      break;
    case CutKind::kCliqueX:
      offsets = {{0, 0}, {h, h}, {-h, h}, {-h, -h}, {h, -h}};
      break;
    case CutKind::kCliqueSquare:
      offsets = {{0, 0}, {h, 0}, {h, h}, {0, h}};
      break;
    default:
      throw std::invalid_argument("not a clique family");
  }
  std::vector<CutTerm> terms;
  for (const auto& [dr, dc] : offsets) {
    if (on_board(n, i + dr, j + dc)) terms.push_back({{i + dr, j + dc}, 1});
  }
  if (terms.size() < 2) terms.clear();
  std::sort(terms.begin(), terms.end(),
            [](const CutTerm& a, const CutTerm& b) { return a.cell < b.cell; });
  return terms;
}

template <class Num>
Num cut_violation(int n, const Cut& cut, const std::vector<Num>& x) {
  Num lhs(0);
  for (const CutTerm& t : cut.terms) {
    lhs += Num(static_cast<long>(t.coef)) * x[cell_index(n, t.cell)];
  }
  return lhs - Num(static_cast<long>(cut.rhs));
}

template <class Num>
std::vector<Cut> separate_cliques(const ModelState& state,
                                  const std::vector<Num>& x,
                                  const Tolerances& tol) {
  const int n = state.n();
  check_size(n, x);
  std::vector<Cut> cuts;
  std::set<std::vector<int>> seen;
  for (CutKind kind :
       {CutKind::kCliquePlus, CutKind::kCliqueX, CutKind::kCliqueSquare}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int h = 1; h < n; ++h) {
          std::vector<CutTerm> terms = clique_members(n, kind, i, j, h);
          if (terms.empty()) continue;
          Num lhs(0);
          for (const CutTerm& t : terms) lhs += x[cell_index(n, t.cell)];
          if (!NumTraits<Num>::is_pos(lhs - Num(1), tol.separation)) continue;
          Cut cut{std::move(terms), 1, kind};
          if (seen.insert(sorted_cells(n, cut)).second) cuts.push_back(std::move(cut));
        }
      }
    }
  }
  return cuts;
}

template <class Num>
std::vector<Cut> separate_odd_cycles(const ModelState& state,
                                     const std::vector<Num>& x,
                                     const Tolerances& tol) {
  const int n = state.n();
  check_size(n, x);
  // Conflict graph on the LP-positive cells.
  std::vector<int> cells;
  for (int k = 0; k < n * n; ++k) {
    if (NumTraits<Num>::is_pos(x[k], 1e-9)) cells.push_back(k);
  }
  const int m = static_cast<int>(cells.size());
  std::vector<double> xd(m);
  for (int a = 0; a < m; ++a) xd[a] = NumTraits<Num>::to_double(x[cells[a]]);
  std::vector<std::vector<std::pair<int, double>>> adj(m);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!attacks(index_cell(n, cells[a]), index_cell(n, cells[b]))) continue;
      const double w = std::max(0.0, 1.0 - xd[a] - xd[b]);
      adj[a].emplace_back(b, w);
      adj[b].emplace_back(a, w);
    }
  }

  std::vector<Cut> cuts;
  std::set<std::vector<int>> seen;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(2 * m);
  std::vector<int> pred(2 * m);
  for (int s = 0; s < m; ++s) {
    // Node 2a + p is cell a reached with parity p; the target is (s, odd).
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(pred.begin(), pred.end(), -1);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[2 * s] = 0.0;
    heap.emplace(0.0, 2 * s);
    const int target = 2 * s + 1;
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      if (u == target || d >= 1.0) break;
      const int a = u / 2;
      const int p = u % 2;
      for (const auto& [b, w] : adj[a]) {
        const int v = 2 * b + (1 - p);
        if (d + w < dist[v]) {
          dist[v] = d + w;
          pred[v] = u;
          heap.emplace(dist[v], v);
        }
      }
    }
    if (!(dist[target] < 1.0)) continue;

    std::vector<int> walk;  // closed walk, first vertex not repeated at the end
    for (int u = target; u != 2 * s; u = pred[u]) walk.push_back(u / 2);
    std::reverse(walk.begin(), walk.end());
    // Split at repeated vertices, keeping an odd closed sub-walk each time.
    bool reduced = true;
    while (reduced) {
      reduced = false;
      const int len = static_cast<int>(walk.size());
      for (int i = 0; i < len && !reduced; ++i) {
        for (int j = i + 1; j < len && !reduced; ++j) {
          if (walk[i] != walk[j]) continue;
          std::vector<int> inner(walk.begin() + i, walk.begin() + j);
          std::vector<int> outer(walk.begin(), walk.begin() + i);
          outer.insert(outer.end(), walk.begin() + j, walk.end());
          walk = inner.size() % 2 == 1 ? std::move(inner) : std::move(outer);
          reduced = true;
        }
      }
    }
    if (walk.size() < 3 || walk.size() % 2 == 0) continue;

    Cut cut;
    cut.kind = CutKind::kOddCycle;
    cut.rhs = static_cast<int64_t>(walk.size() - 1) / 2;
    for (int a : walk) cut.terms.push_back({index_cell(n, cells[a]), 1});
    std::sort(cut.terms.begin(), cut.terms.end(),
              [](const CutTerm& l, const CutTerm& r) { return l.cell < r.cell; });
    if (!NumTraits<Num>::is_pos(cut_violation(n, cut, x), tol.separation)) continue;
    if (seen.insert(sorted_cells(n, cut)).second) cuts.push_back(std::move(cut));
  }
  return cuts;
}

template <class Num>
std::optional<Cut> make_lex_nogood(int n, const std::vector<Num>& x,
                                   const Tolerances& tol) {
  check_size(n, x);
  Cut cut;
  cut.kind = CutKind::kLexNogood;
  for (int k = 0; k < n * n; ++k) {
    if (NumTraits<Num>::is_pos(NumTraits<Num>::frac_distance(x[k]),
                               tol.integrality)) {
      cut.rhs = static_cast<int64_t>(cut.terms.size());
      cut.terms.push_back({index_cell(n, k), 1});
      return cut;
    }
    if (NumTraits<Num>::is_zero(x[k] - Num(1), tol.integrality)) {
      cut.terms.push_back({index_cell(n, k), 1});
    }
  }
  return std::nullopt;
}

template std::vector<Cut> separate_cliques(const ModelState&,
                                           const std::vector<double>&,
                                           const Tolerances&);
template std::vector<Cut> separate_cliques(const ModelState&,
                                           const std::vector<Rational>&,
                                           const Tolerances&);
template std::vector<Cut> separate_odd_cycles(const ModelState&,
                                              const std::vector<double>&,
                                              const Tolerances&);
template std::vector<Cut> separate_odd_cycles(const ModelState&,
                                              const std::vector<Rational>&,
                                              const Tolerances&);
template std::optional<Cut> make_lex_nogood(int, const std::vector<double>&,
                                            const Tolerances&);
template std::optional<Cut> make_lex_nogood(int, const std::vector<Rational>&,
                                            const Tolerances&);
template double cut_violation(int, const Cut&, const std::vector<double>&);
template Rational cut_violation(int, const Cut&, const std::vector<Rational>&);

}  // namespace nqueens
