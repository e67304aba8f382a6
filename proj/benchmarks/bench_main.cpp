#include <benchmark/benchmark.h>

#include "affsym/context.hpp"
#include "affsym/weyl_ext.hpp"

using namespace affsym;

static void BM_GrassmannianBFS(benchmark::State& state) {
  for (auto _ : state) {
    WeylGroup W(build_cartan(Family::B, 3));
    auto g = W.grassmannian_elements((int)state.range(0));
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GrassmannianBFS)->Arg(5)->Arg(8);

static void BM_PieriFactors(benchmark::State& state) {
  for (auto _ : state) {
    WeylGroup W(build_cartan(Family::B, (int)state.range(0)));
    auto Z = pieri_factors(W);
    benchmark::DoNotOptimize(Z);
  }
}
BENCHMARK(BM_PieriFactors)->Arg(3)->Arg(4);

static void BM_KSchurSolver(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    Context ctx(Family::B, 3);  // fresh caches each round
    state.ResumeTiming();
    auto j = ctx.nilcox.kschur_solver(ctx.nilcox.rho((int)state.range(0)));
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_KSchurSolver)->Arg(3)->Arg(5);

static void BM_Assf(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    Context ctx(Family::B, 3);
    state.ResumeTiming();
    ElemId w = ctx.W.from_word(Word{0, 2, 3, 2, 0});
    benchmark::DoNotOptimize(ctx.assf.assf(w));
  }
}
BENCHMARK(BM_Assf);

static void BM_TranslationWalk(benchmark::State& state) {
  WeylGroup W(build_cartan(Family::B, 4));
  for (auto _ : state) {
    auto t = translation(W, W.cartan().nu_omega[0]);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TranslationWalk);

BENCHMARK_MAIN();
