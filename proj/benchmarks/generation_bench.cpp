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

#include "repwords/morphism.hpp"
#include "repwords/stream.hpp"

namespace {

using namespace repwords;

void BM_HFixedPoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fixed_point_prefix(morphisms::squarefree_quaternary(), 0, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HFixedPoint)->Range(1 << 10, 1 << 20);

void BM_GOfH(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mapped_stream_prefix(morphisms::cubefree_binary(),
                                                  morphisms::squarefree_quaternary(), 0, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GOfH)->Range(1 << 10, 1 << 20);

// Streaming in small chunks, the way the CLI writes long prefixes.
void BM_StreamChunks(benchmark::State& state) {
  for (auto _ : state) {
    WordStream s(morphisms::cubefree_binary(), morphisms::squarefree_quaternary(), 0);
    for (int i = 0; i < 64; ++i) benchmark::DoNotOptimize(s.next(4096));
  }
  state.SetItemsProcessed(state.iterations() * 64 * 4096);
}
BENCHMARK(BM_StreamChunks);

}  // namespace
