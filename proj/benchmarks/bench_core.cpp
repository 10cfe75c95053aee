#include <benchmark/benchmark.h>

#include "tanaka/cochain.hpp"
#include "tanaka/model.hpp"
#include "tanaka/prolongation.hpp"
#include "tanaka/so32.hpp"
#include "tanaka/structeq.hpp"

using namespace tanaka;

static void BM_BracketTableCrosscheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(so32::table_crosscheck());
}
BENCHMARK(BM_BracketTableCrosscheck);

static void BM_HarmonicSpace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cochain::harmonic_space(2, k));
}
BENCHMARK(BM_HarmonicSpace)->DenseRange(1, 4);

static void BM_ProlongationStep(benchmark::State& state) {
  const int step = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prolong::prolong_step(step));
}
BENCHMARK(BM_ProlongationStep)->DenseRange(0, 3);

static void BM_NormalizeCtorsion(benchmark::State& state) {
  auto space = cochain::cochain_space(2, 2);
  Vec local(space.dim());
  for (std::size_t i = 0; i < local.size(); ++i) local[i] = Gaussian(rat(static_cast<long>(i % 7) - 3, 2));
  auto c = cochain::Cochain::make(2, 2, space.embed(local));
  for (auto _ : state) benchmark::DoNotOptimize(prolong::normalize_ctorsion(c));
}
BENCHMARK(BM_NormalizeCtorsion);

static void BM_StructureEquations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(structeq::verify_structure_equations());
}
BENCHMARK(BM_StructureEquations);

static void BM_FreemanRanks(benchmark::State& state) {
  const auto& p = model::sample_points().front();
  for (auto _ : state) benchmark::DoNotOptimize(model::freeman_ranks_at(p));
}
BENCHMARK(BM_FreemanRanks);
BENCHMARK_MAIN();
