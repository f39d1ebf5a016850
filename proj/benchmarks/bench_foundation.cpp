#include <benchmark/benchmark.h>

#include "spwb/int_matrix.hpp"
#include "spwb/ring_matrix.hpp"
#include "spwb/rng.hpp"

using namespace spwb;

static void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(4242);
  IntMat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rng.range(-5, 5);
  for (auto _ : state) {
    SmithResult S = smith_normal_form(A, state.range(1) != 0);
    benchmark::DoNotOptimize(S.rank);
  }
}
BENCHMARK(BM_SmithNormalForm)->Args({8, 1})->Args({16, 1})->Args({16, 0})->Args({32, 0});

static void BM_Pfaffian(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Ring R = Ring::make_local_ring(3, 2);
  Rng rng(99);
  RingMatrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Elem v = static_cast<Elem>(rng.below(9));
      A(i, j) = v;
      A(j, i) = R.neg(v);
    }
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(R, A));
}
BENCHMARK(BM_Pfaffian)->Arg(6)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
