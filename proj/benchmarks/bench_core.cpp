#include <benchmark/benchmark.h>

#include "zrings/counting.hpp"
#include "zrings/dirichlet.hpp"
#include "zrings/goursat.hpp"
#include "zrings/oracle.hpp"

using namespace zrings;

namespace {

void BM_Factorize(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::factorize(n));
}
BENCHMARK(BM_Factorize)->Arg(360)->Arg(720720)->Arg(999983);

void BM_SieveBuild(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::SieveTables(limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SieveBuild)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_CountSubrings(benchmark::State& state) {
  const u64 m = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counting::count_subrings(m, m + 6));
}
BENCHMARK(BM_CountSubrings)->Arg(12)->Arg(5040)->Arg(720720);

void BM_EnumerateTuples(benchmark::State& state) {
  const goursat::Ambient ambient{static_cast<u64>(state.range(0)),
                                 static_cast<u64>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(goursat::enumerate_tuples(ambient));
}
BENCHMARK(BM_EnumerateTuples)->Args({12, 18})->Args({360, 360});

void BM_BruteSubgroups(benchmark::State& state) {
  const goursat::Ambient ambient{static_cast<u64>(state.range(0)),
                                 static_cast<u64>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_subgroups(ambient));
}
BENCHMARK(BM_BruteSubgroups)->Args({12, 18})->Args({24, 24})->Unit(benchmark::kMillisecond);

void BM_SeriesAssembly(benchmark::State& state) {
  const u64 X = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto zb = [X](u32 a, u32 b, u32 s) { return dirichlet::zeta_block(a, b, s, X); };
    const auto h_series =
        dirichlet::divide(dirichlet::multiply(dirichlet::multiply(zb(1, 0, 0), zb(0, 1, 0)),
                                              dirichlet::multiply(zb(1, 1, 0), zb(2, 2, 1))),
                          dirichlet::multiply(zb(1, 2, 0), zb(2, 1, 0)));
    benchmark::DoNotOptimize(h_series);
  }
}
BENCHMARK(BM_SeriesAssembly)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_PartialSumSubrings(benchmark::State& state) {
  const u64 x = static_cast<u64>(state.range(0));
  const unsigned jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::partial_sum_subrings(x, jobs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartialSumSubrings)
    ->Args({1024, 1})
    ->Args({4096, 1})
    ->Args({4096, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
