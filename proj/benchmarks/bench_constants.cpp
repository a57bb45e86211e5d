#include <benchmark/benchmark.h>

#include "meanomega/euler_product.hpp"
#include "meanomega/verify.hpp"

using namespace meanomega;

static void BM_ConstantDirect(benchmark::State& state) {
  const std::uint64_t P = std::uint64_t(state.range(0));
  for (auto _ : state) {
    auto r = euler_constant_direct(2, Variant::thm3, P);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ConstantDirect)->Arg(100000)->Arg(1000000)->Arg(10000000)
    ->Unit(benchmark::kMillisecond);

static void BM_ConstantSeries(benchmark::State& state) {
  const std::uint64_t p0 = std::uint64_t(state.range(0));
  for (auto _ : state) {
    auto r = euler_constant_series(2, Variant::thm3, p0, 60);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ConstantSeries)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_PrimeZeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prime_zeta(2.0, 100));
}
BENCHMARK(BM_PrimeZeta);

static void BM_Theta(benchmark::State& state) {
  const std::uint64_t x = std::uint64_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta(x));
}
BENCHMARK(BM_Theta)->Arg(1000000)->Arg(100000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
