#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "nqueens/beauty.hpp"
#include "oracles.hpp"

using namespace nqueens;

namespace {

const Fingerprint kSix{34, 34, 26, 26, 10, 10};
const std::vector<int> kSixteen{9, 11, 4, 14, 10, 2, 5, 1, 16, 12, 15, 7, 3, 13, 6, 8};

int level_count(int n, const std::vector<int>& cols, int64_t cost) {
  int c = 0;
  for (int i = 1; i <= n; ++i) c += oracle::cost(n, i, cols[i - 1]) == cost;
  return c;
}

}  // namespace

TEST(CellCosts, Examples) {
  const CellCosts c6(6);
  EXPECT_EQ(c6(1, 4), 26);
  EXPECT_EQ(c6(2, 1), 34);
  EXPECT_EQ(c6(3, 5), 10);
  EXPECT_EQ(c6(1, 1), 50);
  EXPECT_EQ(CellCosts(7)(4, 4), 0);
  EXPECT_EQ(CellCosts(1)(1, 1), 0);
  EXPECT_THROW(CellCosts(0), std::invalid_argument);
}

TEST(CellCosts, SymmetryLevelsAndPartition) {
  for (int n = 1; n <= 12; ++n) {
    const CellCosts c(n);
    int64_t lo = INT64_MAX;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const int64_t v = c(i, j);
        EXPECT_EQ(v, oracle::cost(n, i, j));
        EXPECT_EQ(v, c(j, i));
        EXPECT_EQ(v, c(n + 1 - i, j));
        EXPECT_EQ(v, c(i, n + 1 - j));
        EXPECT_EQ(v, c(n + 1 - j, n + 1 - i));
        lo = std::min(lo, v);
      }
    }
    EXPECT_EQ(lo, n % 2 == 0 ? 2 : 0);
    const auto& levels = c.levels();
    std::vector<int> seen(n * n, 0);
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (k > 0) EXPECT_LT(levels[k], levels[k - 1]);
      for (int cell : c.level_cells(static_cast<int>(k))) {
        ++seen[cell];
        EXPECT_EQ(c.at(index_cell(n, cell)), levels[k]);
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(Fingerprint, Examples) {
  EXPECT_EQ(fingerprint(Permutation({4, 1, 5, 2, 6, 3})), kSix);
  EXPECT_EQ(fingerprint(Permutation({1})), Fingerprint{0});
  const std::vector<int> four{2, 4, 1, 3};
  EXPECT_EQ(fingerprint(Permutation(four)), oracle::fingerprint_of(4, four));
  EXPECT_THROW(fingerprint(Permutation({1, 2}), CellCosts(3)), std::invalid_argument);
}

TEST(FingerprintCompare, Examples) {
  EXPECT_EQ(fingerprint_compare(kSix, kSix), std::strong_ordering::equal);
  EXPECT_EQ(fingerprint_compare({50, 2}, {34, 34}), std::strong_ordering::greater);
  EXPECT_EQ(fingerprint_compare({34, 10}, {34, 26}), std::strong_ordering::less);
  EXPECT_THROW(fingerprint_compare({1}, {1, 2}), std::invalid_argument);
  for (const auto& s : oracle::all_solutions(6)) {
    EXPECT_NE(fingerprint_compare(kSix, fingerprint(Permutation(s))), std::strong_ordering::greater);
  }
}

TEST(MostBeautiful, SixQueens) {
  for (Arithmetic a : {Arithmetic::kFloat, Arithmetic::kRational}) {
    BeautyOptions o;
    o.arithmetic = a;
    const BeautyReport r = solve_most_beautiful(6, o);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_EQ(r.fingerprint, kSix);
    EXPECT_EQ(fingerprint(*r.solution), kSix);
    EXPECT_TRUE(is_feasible(*r.solution));
  }
}

TEST(MostBeautiful, SixteenQueensMatchesArchive) {
  ASSERT_TRUE(is_feasible(Permutation(kSixteen)));
  const BeautyReport r = solve_most_beautiful(16);
  ASSERT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_EQ(r.fingerprint, fingerprint(Permutation(kSixteen)));
}

// The fingerprint is the smallest over all placements.
TEST(MostBeautiful, MinimalByEnumeration) {
  for (int n = 4; n <= 9; ++n) {
    const auto best = oracle::min_fingerprint(n);
    ASSERT_TRUE(best);
    const BeautyReport r = solve_most_beautiful(n);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_EQ(r.fingerprint, *best) << n;
    EXPECT_EQ(fingerprint(*r.solution), r.fingerprint) << n;
  }
}

// Each solved level count is the minimum over the placements that match
// every costlier level; levels not listed were fixed to zero.
TEST(MostBeautiful, LevelCountsAreOptimal) {
  for (int n = 4; n <= 12; ++n) {
    const BeautyReport r = solve_most_beautiful(n);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    std::map<int64_t, int> solved;
    for (const LevelOutcome& l : r.levels) solved[l.cost] = l.count;
    const CellCosts costs(n);
    std::vector<std::vector<int>> alive = oracle::all_solutions(n);
    int placed = 0;
    for (int64_t level : costs.levels()) {
      if (placed == n) break;
      int lo = n + 1;
      for (const auto& s : alive) lo = std::min(lo, level_count(n, s, level));
      const auto it = solved.find(level);
      const int pinned = it == solved.end() ? 0 : it->second;
      EXPECT_EQ(lo, pinned) << "n=" << n << " level " << level;
      std::erase_if(alive, [&](const auto& s) { return level_count(n, s, level) != pinned; });
      ASSERT_FALSE(alive.empty());
      placed += pinned;
    }
    EXPECT_EQ(placed, n);
  }
}

TEST(MostBeautiful, SeedInvariant) {
  for (int n = 8; n <= 12; ++n) {
    const Fingerprint base = solve_most_beautiful(n).fingerprint;
    for (uint64_t seed : {1u, 7u, 99u}) {
      BeautyOptions o;
      o.seed = seed;
      EXPECT_EQ(solve_most_beautiful(n, o).fingerprint, base) << n << " seed " << seed;
    }
  }
}

TEST(MostBeautiful, EarlyExitAndPreprocessDoNotChangeTheAnswer) {
  for (int n = 5; n <= 12; ++n) {
    const Fingerprint base = solve_most_beautiful(n).fingerprint;
    BeautyOptions full;
    full.early_exit = false;
    const BeautyReport f = solve_most_beautiful(n, full);
    EXPECT_EQ(f.fingerprint, base) << n;
    EXPECT_GE(f.levels.size(), solve_most_beautiful(n).levels.size());
    BeautyOptions raw;
    raw.preprocess = false;
    EXPECT_EQ(solve_most_beautiful(n, raw).fingerprint, base) << n;
    BeautyOptions small;
    small.stride = 3;
    const BeautyReport sr = solve_most_beautiful(n, small);
    EXPECT_EQ(sr.fingerprint, base) << n;
  }
}

TEST(MostBeautiful, CanonicalWitnessIsLexFirstOptimum) {
  for (int n = 5; n <= 9; ++n) {
    const auto best = *oracle::min_fingerprint(n);
    std::vector<int> want;
    for (const auto& s : oracle::all_solutions(n)) {
      if (oracle::fingerprint_of(n, s) == best) {
        want = s;
        break;
      }
    }
    BeautyOptions o;
    o.canonical_witness = true;
    const BeautyReport r = solve_most_beautiful(n, o);
    ASSERT_TRUE(r.solution);
    EXPECT_EQ(r.solution->values(), want) << n;
  }
}

TEST(PreprocessSkip, StridePastTheEndFails) {
  const CellCosts costs(8);
  ModelState s(8);
  const SkipResult r = preprocess_skip(s, costs, 0, 1000);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.next_k, 0);
  EXPECT_EQ(s.num_free(), 64);
}

TEST(PreprocessSkip, SixteenWithDefaultStrideFails) {
  const CellCosts costs(16);
  ASSERT_LT(costs.levels().size(), 100u);
  ModelState s(16);
  const SkipResult r = preprocess_skip(s, costs, 0, 100);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.next_k, 0);
}

// A short stride from the outermost level succeeds on a larger board, and the
// cells it clears are empty in a most-beautiful placement.
TEST(PreprocessSkip, SuccessfulProbeFixesCostlyCells) {
  const int n = 20;
  const CellCosts costs(n);
  ModelState s(n);
  const SkipResult r = preprocess_skip(s, costs, 0, 3);
  ASSERT_TRUE(r.success);
  EXPECT_EQ(r.next_k, 3);
  for (int level = 0; level <= 3; ++level) {
    for (int cell : costs.level_cells(level)) EXPECT_EQ(s.state(cell), CellState::kZero);
  }
  const BeautyReport b = solve_most_beautiful(n);
  ASSERT_EQ(b.status, SolveStatus::kOptimal);
  EXPECT_LT(b.fingerprint.front(), costs.levels()[3]);
}

TEST(MostBeautiful, DeterministicReports) {
  BeautyReport a = solve_most_beautiful(10);
  BeautyReport b = solve_most_beautiful(10);
  a.wall_time = b.wall_time = 0;
  EXPECT_EQ(a, b);
}
