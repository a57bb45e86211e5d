#include <benchmark/benchmark.h>

#include "meanomega/sieve.hpp"

using namespace meanomega;

static void BM_SieveSegment(benchmark::State& state) {
  const std::uint64_t lo = std::uint64_t(state.range(0));
  const std::uint64_t len = 1 << 20;
  auto primes = primes_up_to(isqrt_u64(lo + len - 1));
  for (auto _ : state) {
    auto seg = sieve_segment(lo, lo + len, primes);
    benchmark::DoNotOptimize(seg.d.data());
  }
  state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_SieveSegment)->Arg(1)->Arg(100000000)->Arg(9000000000);

static void BM_AccumulateBuckets(benchmark::State& state) {
  const std::uint64_t x = std::uint64_t(state.range(0));
  const unsigned threads = unsigned(state.range(1));
  for (auto _ : state) {
    auto b = accumulate_buckets(x, {x}, kDefaultSegmentSize, threads);
    benchmark::DoNotOptimize(b[0].T.data());
  }
  state.SetItemsProcessed(state.iterations() * x);
}
BENCHMARK(BM_AccumulateBuckets)
    ->Args({10000000, 1})
    ->Args({10000000, 4})
    ->Args({100000000, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_TauzPrefix(benchmark::State& state) {
  const std::uint64_t x = std::uint64_t(state.range(0));
  for (auto _ : state) {
    auto s = tauz_prefix_sums(2.0 / 3.0, {x});
    benchmark::DoNotOptimize(s.data());
  }
  state.SetItemsProcessed(state.iterations() * x);
}
BENCHMARK(BM_TauzPrefix)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_HyperbolaSum(benchmark::State& state) {
  const std::uint64_t x = std::uint64_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperbola_sum(x));
}
BENCHMARK(BM_HyperbolaSum)->Arg(1000000)->Arg(1000000000);

BENCHMARK_MAIN();
