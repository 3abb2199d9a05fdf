// Copyright 2026 The subvar Authors.
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

#include "grid_model.hpp"
#include "subvar/factor_graph.hpp"
#include "subvar/message_passing.hpp"

namespace subvar {
namespace {

void BM_ParallelMessagePassing(benchmark::State& state) {
  const auto graph = model_factor_graph(bench::grid_model(static_cast<std::size_t>(state.range(0)), 4));
  MessagePassingOptions options;
  options.workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel_mp(graph, options));
}
BENCHMARK(BM_ParallelMessagePassing)
    ->ArgsProduct({{8, 16}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_SequentialEp(benchmark::State& state) {
  const auto graph = model_factor_graph(bench::grid_model(static_cast<std::size_t>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(run_sequential_ep(graph));
}
BENCHMARK(BM_SequentialEp)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace subvar
