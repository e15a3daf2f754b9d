#include <benchmark/benchmark.h>

#include "walg/acceptance.hpp"
#include "walg/coproduct.hpp"
#include "walg/fock.hpp"
#include "walg/miura.hpp"
#include "walg/oracle.hpp"

using namespace walg;

static void BM_PrincipalGenerators(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(principal_generators(N));
}
BENCHMARK(BM_PrincipalGenerators)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_NthProduct(benchmark::State& state) {
  auto W = principal_generators(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_product(W[3], n, W[3]));
}
BENCHMARK(BM_NthProduct)->DenseRange(-1, 5)->Unit(benchmark::kMicrosecond);

static void BM_PrincipalKernel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(principal_kernel_check(N));
}
BENCHMARK(BM_PrincipalKernel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SubregularKernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(subregular_kernel_check(3));
}
BENCHMARK(BM_SubregularKernel)->Unit(benchmark::kMillisecond);

static void BM_Factorization(benchmark::State& state) {
  const Pyramid p = Pyramid::from_columns(std::vector<int>(static_cast<size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(factorization_check(p, 1));
}
BENCHMARK(BM_Factorization)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  TablePtr t = oracle_table_heisenberg();
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(engine_oracle_check(t, w, 3, "bench"));
}
BENCHMARK(BM_Oracle)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
