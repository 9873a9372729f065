#include <benchmark/benchmark.h>

#include "qqpft/generators.hpp"
#include "qqpft/time_frequency.hpp"

namespace {

using namespace qqpft;

const ParamPair kPair = {{0.3, 1.1, 0.2, -0.4, 0.5}, {-0.2, 0.9, 0.1, 0.3, -0.6}};

void BM_QqpftFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QSignal2D f = gen_random_smooth(GridSpec(n, 16.0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qqpft_fast(f, kPair));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_QqpftFast)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_QqpftDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QSignal2D f = gen_random_smooth(GridSpec(n, 16.0), 1);
  const FreqGridSpec freq = canonical_freq_grid(f.spec(), kPair);
  for (auto _ : state) benchmark::DoNotOptimize(qqpft_direct(f, kPair, freq));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_QqpftDirect)->Arg(16)->Arg(32)->Arg(64);

void BM_QqpftInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QSignal2D f = gen_random_smooth(GridSpec(n, 16.0), 1);
  const QQPFTResult F = qqpft_fast(f, kPair);
  for (auto _ : state) benchmark::DoNotOptimize(qqpft_inverse(F, f.spec()));
}
BENCHMARK(BM_QqpftInverse)->Arg(32)->Arg(64)->Arg(128);

void BM_StqqpftSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec spec(n, 16.0);
  const WindowedPair wp(gen_random_smooth(spec, 1), gen_gaussian(spec, 1.0), kPair);
  int m = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stqqpft_slice(wp, m % n, (m / n) % n));
    ++m;
  }
}
BENCHMARK(BM_StqqpftSlice)->Arg(32)->Arg(64)->Arg(128);

void BM_QqpwvdSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec spec(n, 16.0);
  const QSignal2D f = gen_random_smooth(spec, 1);
  const QSignal2D g = gen_gaussian(spec, 1.0);
  int m = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qqpwvd_slice(f, g, kPair, m % n, (m / n) % n));
    ++m;
  }
}
BENCHMARK(BM_QqpwvdSlice)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
