// Kernels that dominate the acceptance suite.

#include <benchmark/benchmark.h>

#include <random>

#include "klr/charalg.hpp"
#include "klr/klrengine.hpp"
#include "klr/strata.hpp"

using namespace klr;

namespace {

std::shared_ptr<const CartanData> type(const char* label) {
  return std::make_shared<const CartanData>(CartanData::build(label));
}

void BM_ShuffleWords(benchmark::State& state) {
  const auto cd = CartanData::build("A2~");
  const auto n = static_cast<std::size_t>(state.range(0));
  Word u, v;
  for (std::size_t k = 0; k < n; ++k) {
    u.push_back(static_cast<char>(k % 3));
    v.push_back(static_cast<char>((k + 1) % 3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_words(cd, u, v));
}
BENCHMARK(BM_ShuffleWords)->DenseRange(2, 6, 2);

void BM_EngineMultiply(benchmark::State& state) {
  const auto cd = type("A2~");
  RootVector theta{1, 1, 1};
  if (state.range(0) == 4) theta = RootVector{2, 1, 1};
  KlrEngine e(cd, theta);
  std::mt19937 rng(7);
  std::vector<AlgebraElement> xs;
  for (int k = 0; k < 32; ++k) xs.push_back(e.random_element(rng, 3, 2));
  std::size_t k = 0;
  for (auto _ : state) {
    // A fresh engine each batch would measure memo warm-up instead.
    benchmark::DoNotOptimize(e.multiply(xs[k % xs.size()], xs[(k + 7) % xs.size()]));
    ++k;
  }
}
BENCHMARK(BM_EngineMultiply)->Arg(3)->Arg(4);

void BM_GradedDim(benchmark::State& state) {
  const auto cd = type("A1~");
  KlrEngine e(cd, RootVector{2, 2});
  const Word i = e.words().front(), j = e.words().back();
  for (auto _ : state) benchmark::DoNotOptimize(e.graded_dim(i, j, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GradedDim)->Arg(6)->Arg(10);

void BM_DimensionRank(benchmark::State& state) {
  const auto cd = type("A1~");
  for (auto _ : state) benchmark::DoNotOptimize(dimension_rank_check(cd, RootVector{2, 1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DimensionRank)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_StandardTable(benchmark::State& state) {
  const auto cd = type(state.range(0) == 1 ? "A1~" : "A2~");
  const auto order = ConvexPreorder::slope(cd, {});
  TableOptions opts;
  opts.minuscule = false;
  for (auto _ : state) benchmark::DoNotOptimize(build_standard_table(order, 3 * cd->delta_height(), opts));
}
BENCHMARK(BM_StandardTable)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Triangle(benchmark::State& state) {
  const auto cd = type("A2~");
  const auto order = ConvexPreorder::slope(cd, {});
  const auto t = build_standard_table(order, cd->delta_height());
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_triangle(cd->delta(), order, t));
}
BENCHMARK(BM_Triangle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
