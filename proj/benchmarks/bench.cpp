#include <benchmark/benchmark.h>

#include "klmult/covex.hpp"
#include "klmult/groebner.hpp"
#include "klmult/pipeline.hpp"
#include "klmult/tableaux.hpp"

using namespace klmult;

static void BM_RunningExampleGroebner(benchmark::State& state) {
  Permutation v = Permutation::parse("5123746");
  Permutation w = Permutation::parse("7531462");
  for (auto _ : state) {
    TermOrder ord = covex_order(v, w);
    auto res = buchberger(kl_generators(v, w, ord), ord);
    benchmark::DoNotOptimize(res.basis.size());
  }
}
BENCHMARK(BM_RunningExampleGroebner);

static void BM_PairReport(benchmark::State& state) {
  Permutation v = Permutation::parse("5123746");
  Permutation w = Permutation::parse("7531462");
  for (auto _ : state) {
    PairReport r = compute_pair_report(v, w, Shuffle::Covex);
    benchmark::DoNotOptimize(r.checks.size());
  }
}
BENCHMARK(BM_PairReport);

static void BM_CovexSweep(benchmark::State& state) {
  SweepOptions opt;
  opt.n = static_cast<int>(state.range(0));
  opt.shuffle = Shuffle::Covex;
  for (auto _ : state) {
    SweepResult res = run_sweep(opt);
    benchmark::DoNotOptimize(res.pairs);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CovexSweep)->Arg(3)->Arg(4);

static void BM_FlaggedEnumeration(benchmark::State& state) {
  Partition lambda({4, 3, 2, 1});
  FlagVector b{{2, 4, 5, 6}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_flagged_ssyt(lambda, b));
  }
}
BENCHMARK(BM_FlaggedEnumeration);

static void BM_Theta(benchmark::State& state) {
  Permutation v = Permutation::parse("5123746");
  Permutation w = Permutation::parse("7531462");
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta(v, w).word().size());
  }
}
BENCHMARK(BM_Theta);

BENCHMARK_MAIN();
