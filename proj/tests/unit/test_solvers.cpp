#include <gtest/gtest.h>

#include <gmpxx.h>

#include <random>

#include "nqueens/bnb.hpp"
#include "nqueens/model_lp.hpp"
#include "nqueens/solvers.hpp"
#include "oracles.hpp"

using namespace nqueens;

namespace {

const std::vector<int> kTen{1, 3, 6, 8, 10, 5, 9, 2, 4, 7};

const std::vector<Method> kAllMethods{Method::kCp,    Method::kIlpIter, Method::kIlpTrunc,
                                      Method::kLexDfs, Method::kLexCut, Method::kBigintOracle};

SolveReport run(Method m, int n, std::optional<Arithmetic> a = std::nullopt) {
  SolveOptions o;
  o.method = m;
  o.arithmetic = a;
  return solve(n, o);
}

std::vector<int> lex_first(int n) { return oracle::completions(n, {}, 1).front(); }

}  // namespace

TEST(Methods, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("simplex"), std::invalid_argument);
  EXPECT_EQ(default_arithmetic(Method::kLexCut), Arithmetic::kRational);
  EXPECT_EQ(default_arithmetic(Method::kIlpIter), Arithmetic::kFloat);
}

TEST(Solve, TenQueensEveryMethod) {
  for (Method m : kAllMethods) {
    const SolveReport r = run(m, 10);
    ASSERT_EQ(r.status, SolveStatus::kOptimal) << to_string(m);
    EXPECT_EQ(r.solution->values(), kTen) << to_string(m);
    EXPECT_EQ(r.method, m);
    EXPECT_EQ(r.n, 10);
  }
}

TEST(Solve, SmallBoards) {
  for (Method m : kAllMethods) {
    EXPECT_EQ(run(m, 4).solution->values(), (std::vector<int>{2, 4, 1, 3})) << to_string(m);
    EXPECT_EQ(run(m, 5).solution->values(), (std::vector<int>{1, 3, 5, 2, 4})) << to_string(m);
    EXPECT_EQ(run(m, 6).solution->values(), (std::vector<int>{2, 4, 6, 1, 3, 5})) << to_string(m);
  }
}

TEST(Solve, CpOnTinyBoards) {
  EXPECT_EQ(run(Method::kCp, 1).solution->values(), std::vector<int>{1});
  EXPECT_EQ(run(Method::kCp, 2).status, SolveStatus::kInfeasible);
  const SolveReport r = run(Method::kCp, 3);
  EXPECT_EQ(r.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(r.solution);
}

TEST(Solve, BigintCap) {
  EXPECT_THROW(solve_bigint_oracle(50), std::invalid_argument);
  EXPECT_THROW(solve_bigint_oracle(3), std::invalid_argument);
}

TEST(BigintObjective, Coefficients) {
  const int n = 4;
  const SparseVector obj = bigint_objective(n);
  ASSERT_EQ(static_cast<int>(obj.size()), n * n);
  for (const auto& [k, c] : obj) {
    const Cell cell = index_cell(n, k);
    mpz_class want;
    mpz_ui_pow_ui(want.get_mpz_t(), 2, n * (n - cell.row) + cell.col);
    EXPECT_EQ(c, Rational(want)) << k;
  }
  // Row-major lex order of placements is the order of objective values.
  const auto sols = oracle::all_solutions(6);
  const SparseVector big = bigint_objective(6);
  Rational prev(-1);
  for (const auto& s : sols) {
    std::vector<Rational> x(36, Rational(0));
    for (int i = 0; i < 6; ++i) x[i * 6 + s[i] - 1] = 1;
    const Rational z = oracle::evaluate(big, x);
    EXPECT_GT(z, prev);
    prev = z;
  }
}

TEST(BnbMinimize, Examples) {
  for (Arithmetic a : {Arithmetic::kRational, Arithmetic::kFloat}) {
    const auto r4 = a == Arithmetic::kRational
                        ? bnb_minimize<Rational>(ModelState(4), row_objective(4, 1))
                        : bnb_minimize<double>(ModelState(4), row_objective(4, 1));
    ASSERT_EQ(r4.status, BnbStatus::kOptimal);
    EXPECT_EQ(*r4.incumbent_value, Rational(2));
    EXPECT_EQ(*r4.lower_bound, Rational(2));
    EXPECT_EQ((*r4.incumbent)[1], 2);
    EXPECT_TRUE(is_feasible(*r4.incumbent));

    const auto r3 = bnb_minimize<Rational>(ModelState(3), row_objective(3, 1));
    EXPECT_EQ(r3.status, BnbStatus::kInfeasible);
    EXPECT_FALSE(r3.lower_bound);

    const auto r5 = bnb_minimize<double>(ModelState(5), row_objective(5, 1));
    ASSERT_EQ(r5.status, BnbStatus::kOptimal);
    EXPECT_EQ(*r5.incumbent_value, Rational(1));
  }
}

// Optimal values of random objectives agree with enumeration; truncated runs
// keep a valid lower bound.
TEST(BnbMinimize, MatchesEnumeration) {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    SparseVector obj;
    for (int k = 0; k < n * n; ++k) {
      const int c = std::uniform_int_distribution<int>(-3, 9)(rng);
      if (c != 0) obj.emplace_back(k, Rational(c));
    }
    Rational best(1000000);
    for (const auto& s : oracle::all_solutions(n)) {
      std::vector<Rational> x(n * n, Rational(0));
      for (int i = 0; i < n; ++i) x[i * n + s[i] - 1] = 1;
      best = std::min(best, oracle::evaluate(obj, x));
    }
    const auto r = bnb_minimize<double>(ModelState(n), obj);
    ASSERT_EQ(r.status, BnbStatus::kOptimal);
    EXPECT_EQ(*r.incumbent_value, best) << t;

    BnbLimits root_only;
    root_only.node_limit = 0;
    const auto tr = bnb_minimize<Rational>(ModelState(n), obj, root_only);
    ASSERT_TRUE(tr.lower_bound);
    EXPECT_LE(*tr.lower_bound, best) << t;
  }
}

// All methods agree with the backtracking oracle; rational and floating
// variants of each method agree with each other.
TEST(Equivalence, AllMethodsUpToTwelve) {
  for (int n = 4; n <= 12; ++n) {
    const std::vector<int> want = lex_first(n);
    for (Method m : kAllMethods) {
      const SolveReport r = run(m, n);
      ASSERT_EQ(r.status, SolveStatus::kOptimal) << to_string(m) << " n=" << n;
      EXPECT_EQ(r.solution->values(), want) << to_string(m) << " n=" << n;
    }
  }
}

TEST(Equivalence, BothArithmetics) {
  for (int n = 4; n <= 10; ++n) {
    const std::vector<int> want = lex_first(n);
    for (Method m : {Method::kIlpIter, Method::kIlpTrunc, Method::kLexDfs, Method::kLexCut}) {
      for (Arithmetic a : {Arithmetic::kRational, Arithmetic::kFloat}) {
        const SolveReport r = run(m, n, a);
        EXPECT_EQ(r.arithmetic, a);
        ASSERT_EQ(r.status, SolveStatus::kOptimal);
        EXPECT_EQ(r.solution->values(), want) << to_string(m) << " " << to_string(a) << " n=" << n;
      }
    }
  }
}

TEST(Equivalence, LexMinimumByEnumeration) {
  for (int n = 4; n <= 9; ++n) {
    const auto sols = oracle::all_solutions(n);
    const auto best = *std::min_element(sols.begin(), sols.end());
    for (Method m : kAllMethods) EXPECT_EQ(run(m, n).solution->values(), best) << to_string(m);
  }
}

TEST(Variants, AgreeWithDefaults) {
  for (int n = 4; n <= 11; ++n) {
    const std::vector<int> want = lex_first(n);
    SolveOptions o;
    o.method = Method::kIlpIter;
    o.positionwise = true;
    EXPECT_EQ(solve(n, o).solution->values(), want) << "positionwise " << n;
    o = {};
    o.method = Method::kCp;
    o.matching_filter = true;
    EXPECT_EQ(solve(n, o).solution->values(), want) << "matching " << n;
    o = {};
    o.method = Method::kLexDfs;
    o.cuts_enabled = true;
    EXPECT_EQ(solve(n, o).solution->values(), want) << "cuts " << n;
    o = {};
    o.method = Method::kIlpTrunc;
    o.node_limit = 50;
    EXPECT_EQ(solve(n, o).solution->values(), want) << "NN=50 " << n;
  }
}

TEST(LexDfsFrom, RespectsRootFixings) {
  for (int n = 5; n <= 8; ++n) {
    ModelState root(n);
    ASSERT_TRUE(root.forbid_prefix(1, 1).ok());
    std::vector<int> want;
    for (const auto& s : oracle::all_solutions(n)) {
      if (s[0] > 1) {
        want = s;
        break;
      }
    }
    const SolveReport r = solve_lex_dfs_from(root);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_EQ(r.solution->values(), want) << n;
  }
}

TEST(IlpTrunc, BacktracksAreSound) {
  for (int n = 4; n <= 10; ++n) {
    int discarded = 0;
    SolveHooks hooks;
    hooks.on_discard = [&](const std::vector<int>& prefix) {
      ++discarded;
      const int k = static_cast<int>(prefix.size());
      // Every value of row k up to the discarded one is out for this prefix.
      std::vector<int> p(prefix.begin(), prefix.end() - 1);
      for (int v = 1; v <= prefix.back(); ++v) {
        p.push_back(v);
        EXPECT_TRUE(oracle::completions(n, p, 1).empty()) << "n=" << n << " row " << k;
        p.pop_back();
      }
    };
    SolveOptions o;
    o.method = Method::kIlpTrunc;
    const SolveReport r = solve(n, o, hooks);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    EXPECT_GE(discarded, r.backtracks);
  }
}

TEST(LexCut, PointsStrictlyDecrease) {
  for (int n = 4; n <= 10; ++n) {
    std::vector<std::vector<Rational>> points;
    std::vector<std::optional<int>> stops;
    SolveHooks hooks;
    hooks.on_lex_point = [&](const std::vector<Rational>& x, std::optional<int> at) {
      points.push_back(x);
      stops.push_back(at);
    };
    SolveOptions o;
    o.method = Method::kLexCut;
    const SolveReport r = solve(n, o, hooks);
    ASSERT_EQ(r.status, SolveStatus::kOptimal);
    ASSERT_FALSE(points.empty());
    EXPECT_EQ(static_cast<int64_t>(points.size()), r.nodes);
    for (std::size_t p = 0; p + 1 < points.size(); ++p) {
      EXPECT_LT(points[p + 1], points[p]) << "n=" << n << " step " << p;
      ASSERT_TRUE(stops[p]);
      EXPECT_FALSE(points[p][*stops[p]].is_integer());
    }
    EXPECT_FALSE(stops.back());
  }
}

TEST(Determinism, IdenticalReports) {
  for (Method m : kAllMethods) {
    SolveReport a = run(m, 9);
    SolveReport b = run(m, 9);
    a.wall_time = b.wall_time = 0;
    EXPECT_EQ(a, b) << to_string(m);
  }
}

TEST(Timeout, StopsAndReportsABranch) {
  SolveOptions o;
  o.method = Method::kLexDfs;
  o.arithmetic = Arithmetic::kFloat;
  o.time_limit = 0.5;
  const SolveReport r = solve(40, o);
  ASSERT_EQ(r.status, SolveStatus::kTimeout);
  EXPECT_FALSE(r.solution);
  EXPECT_LT(r.wall_time, 5.0);
  const std::vector<int>& cols = r.partial_prefix;
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      EXPECT_FALSE(oracle::conflict(a + 1, cols[a], b + 1, cols[b]));
    }
  }

  o.method = Method::kIlpIter;
  const SolveReport it = solve(40, o);
  EXPECT_EQ(it.status, SolveStatus::kTimeout);
}

TEST(Report, OptimalImpliesFeasible) {
  for (Method m : kAllMethods) {
    for (int n = 4; n <= 8; ++n) {
      const SolveReport r = run(m, n);
      if (r.status == SolveStatus::kOptimal) {
        ASSERT_TRUE(r.solution);
        EXPECT_TRUE(is_feasible(*r.solution));
      }
    }
  }
}
