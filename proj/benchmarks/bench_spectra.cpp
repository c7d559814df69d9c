#include <benchmark/benchmark.h>

#include "quiver/checks.hpp"
#include "quiver/families.hpp"
#include "quiver/operators.hpp"
#include "quiver/spectra.hpp"

using namespace quiver;

static void BM_EigenDesc(benchmark::State& state) {
  SplitMix64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix K = kirchhoff(random_quiver(n, 2 * n, n / 2, n / 2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_desc(K));
}
BENCHMARK(BM_EigenDesc)->Arg(8)->Arg(32)->Arg(128);

static void BM_SequenceTable(benchmark::State& state) {
  const Quiver q = k7_ribbon_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(sequence_table(q));
}
BENCHMARK(BM_SequenceTable);

static void BM_EnumerateBrouwer(benchmark::State& state) {
  SearchSpec spec;
  spec.family = {Family::enumerate, static_cast<std::size_t>(state.range(0))};
  spec.checks = {"brouwer"};
  for (auto _ : state) benchmark::DoNotOptimize(search(spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(instance_count(spec)));
}
BENCHMARK(BM_EnumerateBrouwer)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ConnectionPack(benchmark::State& state) {
  SplitMix64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Quiver q = random_quiver(n, n * (n - 1) / 4, 0, 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(connection(q));
}
BENCHMARK(BM_ConnectionPack)->Arg(6)->Arg(10);

static void BM_ExactDeterminant(benchmark::State& state) {
  const Quiver q = complete(static_cast<std::size_t>(state.range(0)));
  const IntMatrix L = connection_matrix(q);
  for (auto _ : state) benchmark::DoNotOptimize(exact_determinant(L));
}
BENCHMARK(BM_ExactDeterminant)->Arg(6)->Arg(10);

static void BM_Certificate(benchmark::State& state) {
  const Quiver q = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brouwer_certificate(q));
}
BENCHMARK(BM_Certificate)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
