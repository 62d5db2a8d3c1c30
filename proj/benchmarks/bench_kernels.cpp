#include <benchmark/benchmark.h>

#include <random>

#include "seidel/linalg.hpp"
#include "seidel/matrix.hpp"
#include "seidel/search.hpp"

namespace {

seidel::SeidelMatrix random_instance(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  seidel::SeidelMatrix s(n);
  for (int idx = 0; idx < seidel::pair_count(n); ++idx)
    if (rng() & 1) s.flip_pair(idx);
  return s;
}

void BM_determinant(benchmark::State& state) {
  int n = int(state.range(0));
  auto s = random_instance(n, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(seidel::determinant(s));
}
BENCHMARK(BM_determinant)->DenseRange(6, 16, 2);

void BM_pfaffian(benchmark::State& state) {
  int n = int(state.range(0));
  auto s = random_instance(n, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(seidel::pfaffian(s));
}
BENCHMARK(BM_pfaffian)->DenseRange(6, 16, 2);

void BM_charpoly(benchmark::State& state) {
  int n = int(state.range(0));
  auto s = random_instance(n, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(seidel::char_poly(s));
}
BENCHMARK(BM_charpoly)->DenseRange(6, 12, 2);

void BM_enumerate_dets(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) {
    auto rep = seidel::enumerate_dets(n, 1);
    benchmark::DoNotOptimize(rep.dets.entries.size());
    state.SetItemsProcessed(state.items_processed() + rep.visited);
  }
}
BENCHMARK(BM_enumerate_dets)->Arg(4)->Arg(6);

void BM_rational_inverse(benchmark::State& state) {
  int n = int(state.range(0));
  auto s = random_instance(n, 777);
  for (auto _ : state) benchmark::DoNotOptimize(seidel::inverse(s));
}
BENCHMARK(BM_rational_inverse)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
