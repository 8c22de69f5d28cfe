#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mseg/characters.hpp"
#include "mseg/graph.hpp"
#include "mseg/seg_crystal.hpp"
#include "mseg/signature.hpp"

using namespace mseg;

namespace {

SignatureWord random_word(std::size_t len) {
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.5);
  SignatureWord w;
  for (std::size_t k = 0; k < len; ++k) w.push_back({coin(rng) ? Sign::Plus : Sign::Minus, k});
  return w;
}

Multisegment golden() {
  return Multisegment({{5, 6}, {5, 7}, {4, 7}, {3, 3}, {3, 6}, {3, 6}, {3, 7},
                       {3, 7}, {2, 6}, {2, 7}, {2, 9}, {-1, 7}, {-1, 1}, {-2, 2}});
}

void BM_reduce(benchmark::State& state) {
  const auto w = random_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(w, Cancellation::MinusPlus));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_reduce)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_apply_e(benchmark::State& state) {
  const auto d = golden();
  for (auto _ : state) benchmark::DoNotOptimize(apply_e(d, 7));
}
BENCHMARK(BM_apply_e);

void BM_apply_f_hat(benchmark::State& state) {
  const auto d = golden();
  for (auto _ : state) benchmark::DoNotOptimize(apply_f_hat(d, 3));
}
BENCHMARK(BM_apply_f_hat);

void BM_char_of_ind(benchmark::State& state) {
  // Length-2 segments over three starts; the shuffle grows factorially.
  std::vector<Segment> segs;
  for (int k = 0; k < state.range(0); ++k) segs.emplace_back(k % 3, k % 3 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(char_of_ind(segs));
}
BENCHMARK(BM_char_of_ind)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_build_blambda_seg(benchmark::State& state) {
  const Weight lambda{1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(build_blambda_seg(lambda, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_build_blambda_seg)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_verify_three_way(benchmark::State& state) {
  const Weight lambda{1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(verify_three_way(lambda, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_verify_three_way)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
