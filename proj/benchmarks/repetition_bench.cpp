// Copyright 2026 The repwords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "repwords/repetition.hpp"
#include "repwords/stream.hpp"

namespace {

using namespace repwords;

Word g_of_h(std::size_t n) {
  return mapped_stream_prefix(morphisms::cubefree_binary(), morphisms::squarefree_quaternary(),
                              0, n);
}

void BM_FindLongSquares(benchmark::State& state) {
  const Word w = g_of_h(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_squares(w, 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindLongSquares)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);

void BM_IsCubefree(benchmark::State& state) {
  const Word w = g_of_h(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cubefree(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsCubefree)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);

void BM_MaxSquareRootThueMorse(benchmark::State& state) {
  const Word w = fixed_point_prefix(morphisms::thue_morse(), 0,
                                    static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_square_root(w));
}
BENCHMARK(BM_MaxSquareRootThueMorse)->RangeMultiplier(4)->Range(256, 16384);

void BM_AvoidsFactors(benchmark::State& state) {
  const Word w = fixed_point_prefix(morphisms::squarefree_quaternary(), 0,
                                    static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(avoids_factors(w, factor_sets::quaternary_all()));
}
BENCHMARK(BM_AvoidsFactors)->Range(1 << 10, 1 << 18);

}  // namespace
