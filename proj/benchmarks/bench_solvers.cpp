#include <benchmark/benchmark.h>

#include "nqueens/beauty.hpp"
#include "nqueens/solvers.hpp"

using namespace nqueens;

namespace {

void run_method(benchmark::State& st, Method m, Arithmetic a) {
  const int n = static_cast<int>(st.range(0));
  SolveOptions o;
  o.method = m;
  o.arithmetic = a;
  for (auto _ : st) {
    SolveReport r = solve(n, o);
    benchmark::DoNotOptimize(r);
  }
}

void BM_Cp(benchmark::State& st) { run_method(st, Method::kCp, Arithmetic::kFloat); }
void BM_IlpIter(benchmark::State& st) { run_method(st, Method::kIlpIter, Arithmetic::kFloat); }
void BM_IlpTrunc(benchmark::State& st) { run_method(st, Method::kIlpTrunc, Arithmetic::kFloat); }
void BM_LexDfsFloat(benchmark::State& st) { run_method(st, Method::kLexDfs, Arithmetic::kFloat); }
void BM_LexDfsRational(benchmark::State& st) {
  run_method(st, Method::kLexDfs, Arithmetic::kRational);
}
void BM_LexCutRational(benchmark::State& st) {
  run_method(st, Method::kLexCut, Arithmetic::kRational);
}

void BM_Beauty(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    BeautyReport r = solve_most_beautiful(n);
    benchmark::DoNotOptimize(r);
  }
}

void BM_GreedyPrefix(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(greedy_infinite_prefix(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_Cp)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IlpIter)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IlpTrunc)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexDfsFloat)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexDfsRational)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexCutRational)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Beauty)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyPrefix)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
